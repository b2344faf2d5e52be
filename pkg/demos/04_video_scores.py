"""Aggregate patch logits into a single score per video.

A video's score is the softmax of its summed patch logits, so every
extra patch adds evidence. At this micro scale one patch already
ranks the clips perfectly and the sweep just shows the plateau; the
climb from imperfect single-patch AUC is what the full-scale
video-level experiment measures on heavily recompressed clips.
"""

from _common import demo_corpus

from vidtrace.detector import TrainConfig, train
from vidtrace.harness import balanced_submanifest, clips_from_manifest, evaluate_model
from vidtrace.residual import DenoiserSpec
from vidtrace.videolevel import sweep_n

manifest = demo_corpus()
video_ids = [p.id for p in manifest.profiles if p.family == "video-like"]
sub = balanced_submanifest(manifest, video_ids)

config = TrainConfig(seed=0, learning_rate=0.01, epochs=480)
model = train(sub, ("real", "synthetic"), DenoiserSpec.parse("gaussian:1.0"), config)

clips = clips_from_manifest(sub, "test", clip_len=4)
print(f"{len(clips)} test clips of 4 frames")
print(f"patch-level AUC: {evaluate_model(model, sub).overall_auc:.4f}")
print("video-level AUC by patch count:")
for n, value in sweep_n(model, clips, (1, 2, 4, 8), seed=0):
    print(f"  N={n:2d}  {value:.4f}")
