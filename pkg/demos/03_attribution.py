"""Attribute frames to their source generator, not just real/fake.

The same features feed a multi-class head with one class per video
generator plus "real". One-vs-rest AUCs measure how cleanly each
class ranks against the rest; they separate long before the argmax
bias terms calibrate, so the confusion table is only worth reading at
full corpus scale (the experiment harness reports it there).
"""

from _common import demo_corpus

from vidtrace.detector import TrainConfig, train
from vidtrace.harness import balanced_submanifest, evaluate_model
from vidtrace.residual import DenoiserSpec

manifest = demo_corpus()
video_ids = [p.id for p in manifest.profiles if p.family == "video-like"]
sub = balanced_submanifest(manifest, video_ids)

classes = ("real", *video_ids)
config = TrainConfig(seed=0, learning_rate=0.01, epochs=480)
model = train(sub, classes, DenoiserSpec.parse("gaussian:1.0"), config)

report = evaluate_model(model, sub)
ovr = report.extras["ovr"]
print(f"macro one-vs-rest AUC: {ovr['macro']:.4f}")
for name, value in sorted(ovr["per_class"].items()):
    print(f"  {name:10s} {value:.4f}")
