"""
CTC alignment on a toy problem
==============================

Scores one target under a random frame posterior three ways: the forward
recursion, explicit path enumeration, and the gradient with respect to the
logits. Ends with greedy decoding and WER scoring of a few hypotheses.
"""
import numpy as np

from ustm.alignment import GlossVocab, brute_force_ctc, ctc_loss, ctc_nll, greedy_decode, wer
from ustm.functional import log_softmax
from ustm.tensor import Tensor

rng = np.random.default_rng(0)
vocab = GlossVocab(("HELLO", "WORLD", "AGAIN"))
V = len(vocab.glosses)

###############################################################################
# Likelihood of one target
# ------------------------
# Six frames, V glosses plus the blank in the last column.

logits = rng.normal(size=(6, V + 1)) * 2.0
log_probs = logits - np.log(np.exp(logits).sum(-1, keepdims=True))
target = [0, 1, 1]

print("target             ", [vocab.glosses[g] for g in target])
print("forward recursion  ", ctc_nll(log_probs, target))
print("path enumeration   ", brute_force_ctc(log_probs, target))

###############################################################################
# Gradient
# --------
# With respect to log-probabilities the gradient is minus the posterior
# occupancy, so every row sums to -1. Chained through log_softmax, the rows
# of dL/dlogits sum to zero.

x = Tensor(logits, requires_grad=True)
ctc_loss(log_softmax(x, -1), target).backward()
print("row sums of dL/dlogits:", np.round(x.grad.sum(-1), 12))

###############################################################################
# Decoding and scoring
# --------------------
# Greedy decoding collapses repeats, then drops blanks.

frames = np.full((8, V + 1), -5.0)
for t, k in enumerate([0, 0, 3, 1, 3, 1, 2, 3]):
    frames[t, k] = 0.0
hyp = greedy_decode(frames)
print("greedy decode      ", [vocab.glosses[g] for g in hyp])

refs = [[0, 1, 1, 2], [2, 0]]
hyps = [hyp, [2]]
score = wer(refs, hyps)
print(f"corpus WER {score.wer:.3f} (sub {score.sub}, del {score.dele}, ins {score.ins}, ref {score.ref_len})")
