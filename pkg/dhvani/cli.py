# -*- coding: utf-8 -*-
#
# This file is part of the Dhvani project.
# Copyright (C) 2025  Dhvani developers
#
# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 2 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, write to the Free Software
# Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston, MA  02110-1301  USA
"""
The ``dhvani`` command.

Reports and manifests are written to standard output (JSON or JSON Lines),
logs to standard error. The exit code is 0 on success, 1 when processing
failed and 2 on a usage error.
"""

import argparse
import json
import logging
import os
import sys
from collections import OrderedDict
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import arrow

from dhvani import config
from dhvani.config import PipelineConfig
from dhvani.lib.alignment import align_chunks, hypotheses_from_records
from dhvani.lib.audio_io import load_audio, save_audio, wav_duration
from dhvani.lib.augment import apply_plan, plan_augmentation
from dhvani.lib.chunking import chunk_for_inference, chunk_for_training
from dhvani.lib.diarization.formats import Corpus, Recordings
from dhvani.lib.diarization.manifest import ManifestPaths, split_corpus
from dhvani.lib.diarization.rttm import parse_uem
from dhvani.lib.diarization.segments import filter_min_duration, resolve_overlaps
from dhvani.lib.exceptions import DhvaniException, FormatError
from dhvani.lib.metrics import CorpusDerReport, corpus_wer, der, rtf
from dhvani.lib.plugins import FORMAT_PLUGINS
from dhvani.lib.postproc import postprocess_transcript
from dhvani.lib.textnorm import normalize_transcript
from dhvani.lib.utilities import (
    assign_splits,
    atomic_write,
    derive_seed,
    read_jsonl,
    read_texts,
    to_jsonl,
    uri_from_path,
)
from dhvani.runner import Runner

_log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _emit(document: Any) -> None:
    sys.stdout.write(json.dumps(document, ensure_ascii=False, indent=2) + "\n")


def _emit_jsonl(records: Iterable[Dict[str, Any]]) -> None:
    sys.stdout.write(to_jsonl(records))


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fd:
        return fd.read()


def _pipeline(args, **overrides) -> Tuple[PipelineConfig, Dict[str, Any]]:
    """Load the configuration file, apply logging and command-line overrides."""
    settings = config.load(args.config)
    config.configure_logging(settings)
    overrides.update(global_seed=args.seed, workers=args.workers)
    return PipelineConfig.from_config(settings, overrides), settings


def _setting(value: Any, settings: Dict[str, Any], key: str) -> Any:
    return settings[key] if value is None else value


def _format(name: str, readable: bool = False, writable: bool = False):
    fmt = FORMAT_PLUGINS.get_plugin(name)
    if fmt is None:
        raise FormatError(f"unknown format {name}")
    if (readable and not fmt.readable) or (writable and not fmt.writable):
        raise FormatError(f"unsupported format {name}")
    return fmt


def _read_recordings(paths: Sequence[str], source: str) -> Recordings:
    fmt = _format(source, readable=True)
    recordings: Recordings = OrderedDict()
    for path in paths:
        recordings.update(fmt.parse(_read(path), uri_from_path(path)))
    return recordings


def _durations(uris: Iterable[str], audio_dir: Optional[str]) -> Dict[str, float]:
    durations = {}
    if audio_dir:
        for uri in uris:
            path = os.path.join(audio_dir, f"{uri}.wav")
            if os.path.exists(path):
                durations[uri] = wav_duration(path)
            else:
                _log.warning("No audio for %s in %s", uri, audio_dir)
    return durations


def _finish(summary) -> int:
    for item, error in summary.errors.items():
        _log.error("Failed: %s: %s", item, error)
    return EXIT_OK if summary.ok else EXIT_FAILURE


def cmd_chunk(args) -> int:
    """Cut recordings into fixed-length chunks."""
    pipeline, _ = _pipeline(args, chunk_seconds=args.chunk_seconds)
    chunker = chunk_for_inference if args.inference else chunk_for_training
    if args.output_dir:
        os.makedirs(args.output_dir, exist_ok=True)

    def job(path):
        uri = uri_from_path(path)
        rows = []
        for chunk in chunker(load_audio(path), pipeline.chunk):
            row = chunk.to_dict(uri)
            if args.output_dir:
                name = f"{uri}_{chunk.index:04d}.wav"
                row["audio"] = os.path.join(args.output_dir, name)
                save_audio(chunk.samples, row["audio"])
            rows.append(row)
        return rows

    summary = Runner(pipeline.workers).run(job, args.audio)
    _emit_jsonl(row for rows in summary.ordered_results() for row in rows)
    return _finish(summary)


def cmd_align(args) -> int:
    """Match chunk hypotheses to spans of the full transcript."""
    pipeline, _ = _pipeline(args)
    uri = args.uri or uri_from_path(args.transcript)
    gt_words = _read(args.transcript).split()
    hyps = hypotheses_from_records(read_jsonl(args.hyps))
    aligned = align_chunks(gt_words, hyps, pipeline.align)
    _emit_jsonl(chunk.to_dict(uri, gt_words) for chunk in aligned)
    return EXIT_OK


def _rewrite_texts(path: str, transform) -> None:
    records = []
    for record in read_texts(path):
        record = dict(record)
        record["text"] = transform(record["text"])
        records.append(record)
    if path.endswith(".jsonl"):
        _emit_jsonl(records)
    else:
        sys.stdout.write("".join(record["text"] + "\n" for record in records))


def cmd_normalize(args) -> int:
    """Normalize transcripts."""
    pipeline, _ = _pipeline(args)
    for path in args.inputs:
        _rewrite_texts(path, lambda text: normalize_transcript(text, pipeline.norm))
    return EXIT_OK


def cmd_postprocess(args) -> int:
    """Clean raw ASR output."""
    pipeline, _ = _pipeline(args)
    for path in args.inputs:
        _rewrite_texts(
            path,
            lambda text: postprocess_transcript(text, pipeline.dedup, pipeline.norm),
        )
    return EXIT_OK


def cmd_augment(args) -> int:
    """Augment recordings, one derived seed per file."""
    pipeline, _ = _pipeline(args)
    os.makedirs(args.output_dir, exist_ok=True)
    if args.plan_dir:
        os.makedirs(args.plan_dir, exist_ok=True)

    def job(path):
        uri = uri_from_path(path)
        buffer = load_audio(path)
        seed = derive_seed(pipeline.global_seed, uri)
        plan = plan_augmentation(buffer.duration_seconds, pipeline.augment, seed)
        output = os.path.join(args.output_dir, f"{uri}.wav")
        save_audio(apply_plan(buffer, plan), output)
        if args.plan_dir:
            atomic_write(
                os.path.join(args.plan_dir, f"{uri}.json"),
                json.dumps(plan.to_dict(), indent=2) + "\n",
            )
        return {
            "uri": uri,
            "seed": seed,
            "windows": len(plan.windows),
            "covered_s": round(plan.covered_s, 3),
        }

    summary = Runner(pipeline.workers).run(job, args.audio)
    _emit_jsonl(summary.ordered_results())
    return _finish(summary)


def cmd_convert(args) -> int:
    """Convert diarization annotations between formats."""
    _, settings = _pipeline(args)
    recordings = _read_recordings(args.inputs, args.source)
    if args.resolve_overlaps:
        recordings = OrderedDict(
            (uri, resolve_overlaps(segments)) for uri, segments in recordings.items()
        )
    uris = list(recordings)
    corpus = Corpus(
        segments=recordings,
        durations=_durations(uris, args.audio_dir),
        splits=split_corpus(
            uris, _setting(args.dev_files, settings, "DEV_FILES"), args.test_uri
        ),
        paths=ManifestPaths(args.audio_root, args.annotation_root),
    )
    sys.stdout.write(_format(args.target, writable=True).render(corpus))
    return EXIT_OK


def cmd_filter_diar(args) -> int:
    """Drop ultra-short segments from system output."""
    _, settings = _pipeline(args)
    min_s = _setting(args.min_duration, settings, "MIN_SEGMENT_S")
    recordings = _read_recordings([args.input], args.source)
    filtered = OrderedDict(
        (uri, filter_min_duration(segments, min_s))
        for uri, segments in recordings.items()
    )
    sys.stdout.write(_format("json", writable=True).render(Corpus(filtered)) + "\n")
    return EXIT_OK


def _text_pairs(ref: str, hyp: str) -> List[Tuple[str, str, str]]:
    if not os.path.isdir(ref):
        return [(uri_from_path(ref), _read(ref), _read(hyp))]
    pairs = []
    for name in sorted(os.listdir(ref)):
        if not name.endswith(".txt"):
            continue
        hyp_path = os.path.join(hyp, name)
        if os.path.exists(hyp_path):
            hyp_text = _read(hyp_path)
        else:
            _log.warning("No hypothesis for %s, scoring it empty", name)
            hyp_text = ""
        pairs.append((uri_from_path(name), _read(os.path.join(ref, name)), hyp_text))
    return pairs


def cmd_score_wer(args) -> int:
    """Word error rate of hypotheses against references."""
    pipeline, _ = _pipeline(args)
    pairs = _text_pairs(args.ref, args.hyp)

    def prepare(text):
        return text if args.raw else normalize_transcript(text, pipeline.norm)

    report = corpus_wer((name, prepare(r), prepare(h)) for name, r, h in pairs)
    document = report.to_dict()
    if args.compare_postprocess:
        cleaned = corpus_wer(
            (
                name,
                prepare(r),
                prepare(postprocess_transcript(h, pipeline.dedup, pipeline.norm)),
            )
            for name, r, h in pairs
        )
        document["postprocessed"] = cleaned.to_dict()["total"]
    _emit(document)
    return EXIT_OK


def cmd_score_der(args) -> int:
    """Diarization error rate of system output against reference RTTM."""
    _, settings = _pipeline(args)
    collar = _setting(args.collar, settings, "COLLAR_S")
    reference = _read_recordings([args.ref], "rttm")
    hypothesis = _read_recordings(
        [args.hyp], "json" if args.hyp.endswith(".json") else "rttm"
    )
    regions = parse_uem(_read(args.uem)) if args.uem else {}
    reports = OrderedDict()
    for uri, segments in reference.items():
        if uri not in hypothesis:
            _log.warning("No hypothesis for %s, scoring it as missed", uri)
        reports[uri] = der(segments, hypothesis.get(uri, []), collar, regions.get(uri))
    if not reports:
        raise FormatError(f"no reference recording in {args.ref}")
    _emit(CorpusDerReport(reports).to_dict())
    return EXIT_OK


def cmd_score_rtf(args) -> int:
    """Real-time factor of an inference run."""
    _pipeline(args)
    if args.inference_time is not None:
        elapsed = args.inference_time
    else:
        if not (args.started and args.finished):
            raise FormatError("--started and --finished go together")
        elapsed = (arrow.get(args.finished) - arrow.get(args.started)).total_seconds()
    if args.audio_duration is not None:
        duration = args.audio_duration
    else:
        duration = sum(wav_duration(path) for path in args.audio)
    _emit(rtf(elapsed, duration).to_dict())
    return EXIT_OK


def cmd_prepare_asr(args) -> int:
    """Build the chunked, aligned and normalized ASR training manifest."""
    pipeline, settings = _pipeline(args, chunk_seconds=args.chunk_seconds)
    val_fraction = _setting(args.val_fraction, settings, "VAL_FRACTION")
    chunk_dir = os.path.join(args.output_dir, "chunks")
    os.makedirs(chunk_dir, exist_ok=True)

    def job(path):
        uri = uri_from_path(path)
        buffer = load_audio(path)
        chunks = chunk_for_training(buffer, pipeline.chunk)
        gt_words = _read(os.path.join(args.transcripts, f"{uri}.txt")).split()
        hyps = hypotheses_from_records(
            read_jsonl(os.path.join(args.hyps, f"{uri}.jsonl"))
        )
        if len(hyps) > len(chunks):
            extra = len(hyps) - len(chunks)
            _log.warning("%s: ignoring %s extra hypotheses", uri, extra)
        hyps = (hyps + [""] * len(chunks))[: len(chunks)]
        aligned = align_chunks(gt_words, hyps, pipeline.align)
        splits = assign_splits(
            len(chunks), val_fraction, derive_seed(pipeline.global_seed, uri)
        )
        rows = []
        for chunk, match, split in zip(chunks, aligned, splits):
            text = normalize_transcript(
                " ".join(gt_words[match.gt_start_word : match.gt_end_word]),
                pipeline.norm,
            )
            if not text:
                continue
            audio = os.path.join(chunk_dir, f"{uri}_{chunk.index:04d}.wav")
            save_audio(chunk.samples, audio)
            rows.append(
                {
                    "audio": audio,
                    "start_s": round(chunk.start_s, 3),
                    "end_s": round(chunk.end_s, 3),
                    "text": text,
                    "score": round(match.score, 4),
                    "low_confidence": match.low_confidence,
                    "split": split,
                }
            )
        return rows, buffer.duration_seconds

    summary = Runner(pipeline.workers).run(job, args.audio)
    results = summary.ordered_results()
    rows = [row for file_rows, _ in results for row in file_rows]
    atomic_write(os.path.join(args.output_dir, "manifest.jsonl"), to_jsonl(rows))
    splits: Dict[str, int] = {"train": 0, "validation": 0}
    for row in rows:
        splits[row["split"]] += 1
    _emit(
        {
            "recordings": len(results),
            "audio_hours": round(sum(d for _, d in results) / 3600.0, 4),
            "chunks": len(rows),
            "words": sum(len(row["text"].split()) for row in rows),
            "splits": splits,
        }
    )
    return _finish(summary)


def cmd_prepare_diar(args) -> int:
    """Build the RTTM, UEM, LST and manifest files of a diarization corpus."""
    _, settings = _pipeline(args)
    dev_files = _setting(args.dev_files, settings, "DEV_FILES")
    os.makedirs(args.output_dir, exist_ok=True)

    recordings = _read_recordings(args.annotations, "csv")
    recordings = OrderedDict(
        (uri, resolve_overlaps(segments)) for uri, segments in recordings.items()
    )
    uris = list(recordings)
    test = list(args.test_uri)
    splits = split_corpus(uris, dev_files, test)
    durations = _durations(uris + test, args.audio_dir)
    paths = ManifestPaths(args.audio_dir, args.output_dir)
    corpus = Corpus(recordings, durations, splits, paths)

    for split, members in splits.items():
        subset = Corpus(
            OrderedDict((uri, recordings.get(uri, [])) for uri in members), durations
        )
        for name in ("rttm", "uem", "lst"):
            content = _format(name, writable=True).render(subset) if members else ""
            atomic_write(paths.split_file(split, name), content)
    atomic_write(
        os.path.join(args.output_dir, "database.yml"),
        _format("manifest", writable=True).render(corpus),
    )

    _emit(
        {
            "recordings": len(uris),
            "audio_hours": round(sum(corpus.duration(u) for u in uris) / 3600.0, 4),
            "segments": sum(len(s) for s in recordings.values()),
            "splits": {split: len(members) for split, members in splits.items()},
        }
    )
    return EXIT_OK


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="TOML configuration file")
    common.add_argument("--seed", type=int, help="global seed")
    common.add_argument("--workers", type=int, help="number of parallel workers")
    return common


def build_parser() -> argparse.ArgumentParser:
    """The argument parser of the ``dhvani`` command."""
    common = _common_parser()
    readable = [f.name for f in FORMAT_PLUGINS.get_plugins() if f.readable]
    writable = [f.name for f in FORMAT_PLUGINS.get_plugins() if f.writable]

    parser = argparse.ArgumentParser(
        prog="dhvani", description="Bangla long-form speech dataset toolkit."
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    chunk = commands.add_parser("chunk", parents=[common], help=cmd_chunk.__doc__)
    chunk.add_argument("audio", nargs="+")
    chunk.add_argument(
        "--inference", action="store_true", help="zero-pad the last chunk"
    )
    chunk.add_argument("--chunk-seconds", type=float)
    chunk.add_argument("--output-dir", help="save chunk audio here")
    chunk.set_defaults(func=cmd_chunk)

    align = commands.add_parser("align", parents=[common], help=cmd_align.__doc__)
    align.add_argument("--transcript", required=True, help="full transcript")
    align.add_argument("--hyps", required=True, help="JSONL chunk hypotheses")
    align.add_argument("--uri")
    align.set_defaults(func=cmd_align)

    for name, func in (("normalize", cmd_normalize), ("postprocess", cmd_postprocess)):
        texts = commands.add_parser(name, parents=[common], help=func.__doc__)
        texts.add_argument("inputs", nargs="+", help="text or JSONL files")
        texts.set_defaults(func=func)

    augment = commands.add_parser("augment", parents=[common], help=cmd_augment.__doc__)
    augment.add_argument("audio", nargs="+")
    augment.add_argument("--output-dir", required=True)
    augment.add_argument("--plan-dir", help="dump augmentation plans here")
    augment.set_defaults(func=cmd_augment)

    convert = commands.add_parser("convert", parents=[common], help=cmd_convert.__doc__)
    convert.add_argument("inputs", nargs="+")
    convert.add_argument("--from", dest="source", choices=readable, default="csv")
    convert.add_argument("--to", dest="target", choices=writable, required=True)
    convert.add_argument("--resolve-overlaps", action="store_true")
    convert.add_argument("--audio-dir", help="read recording durations here")
    convert.add_argument("--audio-root", default="audio")
    convert.add_argument("--annotation-root", default="lists")
    convert.add_argument("--dev-files", type=int)
    convert.add_argument("--test-uri", action="append", default=[])
    convert.set_defaults(func=cmd_convert)

    filter_diar = commands.add_parser(
        "filter-diar", parents=[common], help=cmd_filter_diar.__doc__
    )
    filter_diar.add_argument("input")
    filter_diar.add_argument(
        "--from", dest="source", choices=["rttm", "json"], default="json"
    )
    filter_diar.add_argument("--min-duration", type=float)
    filter_diar.set_defaults(func=cmd_filter_diar)

    score = commands.add_parser("score", help="score system output")
    metrics = score.add_subparsers(dest="metric", metavar="METRIC")
    metrics.required = True

    score_wer = metrics.add_parser("wer", parents=[common], help=cmd_score_wer.__doc__)
    score_wer.add_argument("--ref", required=True, help="file or directory")
    score_wer.add_argument("--hyp", required=True, help="file or directory")
    score_wer.add_argument("--raw", action="store_true", help="skip normalization")
    score_wer.add_argument("--compare-postprocess", action="store_true")
    score_wer.set_defaults(func=cmd_score_wer)

    score_der = metrics.add_parser("der", parents=[common], help=cmd_score_der.__doc__)
    score_der.add_argument("--ref", required=True, help="reference RTTM")
    score_der.add_argument("--hyp", required=True, help="RTTM or JSON")
    score_der.add_argument("--collar", type=float)
    score_der.add_argument("--uem")
    score_der.set_defaults(func=cmd_score_der)

    score_rtf = metrics.add_parser("rtf", parents=[common], help=cmd_score_rtf.__doc__)
    timing = score_rtf.add_mutually_exclusive_group(required=True)
    timing.add_argument("--inference-time", type=float, help="seconds")
    timing.add_argument("--started", help="ISO-8601 timestamp")
    score_rtf.add_argument("--finished", help="ISO-8601 timestamp")
    duration = score_rtf.add_mutually_exclusive_group(required=True)
    duration.add_argument("--audio-duration", type=float, help="seconds")
    duration.add_argument("--audio", nargs="+", help="WAV files")
    score_rtf.set_defaults(func=cmd_score_rtf)

    asr = commands.add_parser(
        "prepare-asr", parents=[common], help=cmd_prepare_asr.__doc__
    )
    asr.add_argument("audio", nargs="+")
    asr.add_argument("--transcripts", required=True, help="directory of <uri>.txt")
    asr.add_argument("--hyps", required=True, help="directory of <uri>.jsonl")
    asr.add_argument("--output-dir", required=True)
    asr.add_argument("--chunk-seconds", type=float)
    asr.add_argument("--val-fraction", type=float)
    asr.set_defaults(func=cmd_prepare_asr)

    diar = commands.add_parser(
        "prepare-diar", parents=[common], help=cmd_prepare_diar.__doc__
    )
    diar.add_argument("annotations", nargs="+", help="CSV annotations")
    diar.add_argument("--audio-dir", required=True)
    diar.add_argument("--output-dir", required=True)
    diar.add_argument("--dev-files", type=int)
    diar.add_argument("--test-uri", action="append", default=[])
    diar.set_defaults(func=cmd_prepare_diar)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the ``dhvani`` command.

    Returns:
        The exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_USAGE if err.code else EXIT_OK

    try:
        return args.func(args)
    except (DhvaniException, ValueError) as err:
        _log.error("%s", err)
    except OSError as err:
        where = getattr(err, "filename", None) or "I/O error"
        _log.error("%s: %s", where, err.strerror)
    return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
