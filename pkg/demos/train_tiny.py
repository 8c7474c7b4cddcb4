"""
A few epochs on a tiny synthetic corpus
=======================================

Renders a handful of sentences, trains for a few epochs, then scores and
decodes the dev split from the best checkpoint. The same steps are exposed
by the ``ustm`` command (gen-data, train, eval, decode).
"""
import json
import sys
import tempfile
from pathlib import Path

from ustm.alignment import GlossVocab
from ustm.config import RunConfig
from ustm.data import SyntheticSpec, gen_dataset
from ustm.training import evaluate, load_dataset, load_model, named_decodes, train

epochs = int(sys.argv[1]) if len(sys.argv) > 1 else 3
work = Path(tempfile.mkdtemp(prefix="ustm-demo-"))

config = RunConfig(
    data=SyntheticSpec(counts={"train": 8, "dev": 4, "test": 0}),
    data_dir=str(work / "data"),
    out_dir=str(work / "run"),
    epochs=epochs,
)

###############################################################################
# Data
# ----

manifest = gen_dataset(config.data, config.data_dir)
vocab = GlossVocab(tuple(manifest.vocab))
for entry in manifest.splits["train"][:3]:
    print(entry["id"], entry["T"], "frames:", " ".join(vocab.glosses[g] for g in entry["target"]))

###############################################################################
# Training
# --------
# One metrics record per split and epoch lands in metrics.log.

meta = train(config, log=print)
print("best epoch", meta["best_epoch"], "dev WER", meta["best_dev_wer"])
for line in (work / "run" / "metrics.log").read_text().splitlines()[-2:]:
    rec = json.loads(line)
    print(f"epoch {rec['epoch']} {rec['split']:5s} total {rec['total']:.3f} wer {rec['wer']:.3f}")

###############################################################################
# Scoring and decoding
# --------------------

model, _ = load_model(config, work / "run" / "best")
result = evaluate(model, load_dataset(manifest, "dev"), config)
print("dev", json.dumps(result.wer.to_json()))
for sid, glosses in named_decodes(result.decodes, vocab):
    print(sid, " ".join(glosses) or "(empty)")
print("artifacts in", work)
