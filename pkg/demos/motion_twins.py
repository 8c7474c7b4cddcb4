"""
Why the backbone needs temporal adapters
========================================

Two glosses that share colour and path but run in opposite directions are
indistinguishable frame by frame. This script renders such a pair, pushes
both clips through a backbone with and without adapters, and compares the
order-free summary of their per-frame features.
"""
import numpy as np

from ustm.backbone import Backbone, BackboneConfig
from ustm.data import render_gloss, twin_pairs
from ustm.nn import initialize
from ustm.tensor import Rng, Tensor, no_grad

a, b = twin_pairs(6)[0]
clip_a = render_gloss(a, 8).astype(np.float32)
clip_b = render_gloss(b, 8).astype(np.float32)
print(f"G{a} and G{b}: same frames in reverse order ->", np.array_equal(clip_a, clip_b[::-1]))

###############################################################################
# Per-frame features
# ------------------
# Sorting each feature column over time discards order. Without adapters the
# sorted features of the two clips coincide. The adapters start as exact
# no-ops, so their up-projections are given random weights here to stand in
# for a trained network.


def features(net, clip):
    with no_grad():
        return net(Tensor(clip[None])).data[0]


def order_free_gap(net):
    fa, fb = features(net, clip_a), features(net, clip_b)
    return np.abs(np.sort(fa, axis=0) - np.sort(fb, axis=0)).max()


plain = initialize(Backbone(BackboneConfig(), tape_ratio=None), 0)
adapted = initialize(Backbone(BackboneConfig()), 0)
print("adapters at init, gap:", order_free_gap(adapted))
for i, tape in enumerate(adapted.adapters()):
    tape.up.weight.assign(Rng(1, "demo", i).normal(tape.up.weight.shape, scale=0.1))
adapted.eval()

print("without adapters, gap:", order_free_gap(plain))
print("with adapters,    gap:", order_free_gap(adapted))
