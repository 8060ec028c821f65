"""
JSON tables of central elements, Bernstein basis elements and classification results.
"""
import json
import os

from loguru import logger
from tqdm import tqdm

from .suite import SuiteContext
from ..utils.errors import ConfigurationError
from ..utils.set_log_level import _progress_enabled

TABLE_KINDS = ("z", "bernstein-basis", "classification")


def table_path(out_dir, datum, kind):
    """<group>_q<q>_<kind>.json inside out_dir."""
    label = datum.label.replace("[", "_").replace("]", "").replace(",", "-")
    return os.path.join(out_dir, f"{label}_q{datum.q}_{kind}.json")


def _z_table(context):
    bernstein = context.bernstein
    rows = []
    for lam in bernstein.dominant_coweights(context.config.max_length):
        rows.append(
            {
                "lambda": list(lam),
                "length": bernstein._length(lam),
                "orbit": [list(mu) for mu, _ in bernstein.orbit(lam)],
                "z": bernstein.central(lam).to_json(),
                "z_charp": bernstein.central(lam, mode="charp").to_json(),
            }
        )
    return rows


def _bernstein_basis_table(context):
    """Columns of the change of basis from the Bernstein basis to the tau-basis."""
    group, bernstein = context.group, context.bernstein
    rows = []
    for w in context.pool(context.config.max_length):
        x = group.lift(w)
        rows.append({"x": group.to_json(x), "B": bernstein.bernstein_basis(x).to_json()})
    return rows


def _classification_table(context):
    return [entry.to_json() for entry in context.supersingular().classify()]


_BUILDERS = {
    "z": _z_table,
    "bernstein-basis": _bernstein_basis_table,
    "classification": _classification_table,
}


def emit_tables(config, out_dir, kinds):
    """Write the selected tables as JSON files.

    Args:
        config (SuiteConfig): Datum and length bound.
        out_dir (string): Output directory, created if missing.
        kinds (list of string): Table kinds from TABLE_KINDS; nothing is written for an empty list.

    Returns:
        list of string: The written paths

    Raises:
        ConfigurationError: for unknown kinds.
        OSError: if a file cannot be written; the message names the path.
    """
    logger.debug("Checking inputs to emit_tables.")
    unknown = [kind for kind in kinds if kind not in TABLE_KINDS]
    if unknown:
        raise ConfigurationError(f"Unknown table kinds {unknown}, available: {list(TABLE_KINDS)}.")
    if not kinds:
        logger.info("No tables selected")
        return []
    context = SuiteContext(config)
    paths = []
    for kind in tqdm(kinds, desc="tables", disable=not _progress_enabled()):
        path = table_path(out_dir, context.datum, kind)
        content = {"datum": context.datum.to_json(), "kind": kind, "rows": _BUILDERS[kind](context)}
        try:
            os.makedirs(out_dir or ".", exist_ok=True)
            with open(path, "w") as f:
                json.dump(content, f, indent=1, sort_keys=True)
        except OSError as err:
            raise OSError(f"Could not write table {path}: {err}") from err
        logger.info(f"Wrote {kind} table to {path}")
        paths.append(path)
    return paths
