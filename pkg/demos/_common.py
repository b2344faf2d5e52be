"""Shared micro corpus for the demo scripts.

Four tiny pseudo-generators (three video-like, one image-like) at 20
frames each, built once under demos/_runs/ and reused by every demo.
"""

from pathlib import Path

from vidtrace.corpus import CorpusConfig, DatasetManifest, GeneratorProfile, build_corpus

RUNS = Path(__file__).resolve().parent / "_runs"

PROFILES = (
    GeneratorProfile("demo-a", "video-like", peaks=((4, 2, 0.12), (7, 4, 0.12), (10, 5, 0.12))),
    GeneratorProfile("demo-b", "video-like", peaks=((1, 4, 0.12), (2, 7, 0.12), (3, 10, 0.12))),
    GeneratorProfile("demo-c", "video-like", peaks=((-2, 4, 0.12), (-4, 7, 0.12), (-5, 10, 0.12))),
    GeneratorProfile("demo-img", "image-like", peaks=((56, 28, 0.08), (112, 56, 0.10))),
)


def demo_corpus():
    corpus_dir = RUNS / "corpus"
    if (corpus_dir / "manifest.json").exists():
        return DatasetManifest.load(corpus_dir / "manifest.json")
    print(f"building demo corpus under {corpus_dir} ...")
    return build_corpus(CorpusConfig(seed=7, profiles=PROFILES, frames_per_source=20), corpus_dir)
