"""playlab: simulation-based strategy analysis for turn-based adversarial games.

Simulates players of varying skill with budget-limited MCTS, records
playtraces, and computes summary / atom / chain / action-space metrics
over them.
"""

__version__ = "0.1.0"
