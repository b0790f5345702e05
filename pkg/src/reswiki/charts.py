"""Deterministic SVG charts for the analysis outputs.

matplotlib is imported lazily so commands that never plot stay fast.
Byte-identical output across runs relies on a fixed svg.hashsalt and on
dropping the creation date from the SVG metadata.
"""

from __future__ import annotations


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    plt.rcParams["svg.hashsalt"] = "reswiki"
    return plt


def _fig_to_svg(plt, fig) -> bytes:
    import io

    buf = io.BytesIO()
    fig.savefig(buf, format="svg", metadata={"Date": None})
    plt.close(fig)
    return buf.getvalue()


def render_changes_svg(series, namespace: str) -> bytes:
    """Line chart of monthly change counts with the cumulative total."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(9, 4.5))
    buckets = [point.bucket for point in series]
    xs = range(len(series))
    ax.plot(xs, [point.count for point in series], marker="o", label="changes per month")
    ax.plot(xs, [point.cumulative for point in series], marker=".", label="cumulative")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(buckets, rotation=45, ha="right", fontsize=8)
    ax.set_xlabel("month")
    ax.set_ylabel("changes")
    ax.set_title(f"Wiki changes over time ({namespace})")
    ax.grid(True, alpha=0.3)
    if series:
        ax.legend()
    fig.tight_layout()
    return _fig_to_svg(plt, fig)


def render_term_frequency_svg(termfreq) -> bytes:
    """Rank/frequency chart, linear plus log-log, for a term distribution."""
    plt = _pyplot()
    fig, (linear, loglog) = plt.subplots(1, 2, figsize=(10, 4.5))
    ranks = range(1, len(termfreq) + 1)
    freqs = [frequency for _, frequency in termfreq]
    linear.plot(list(ranks), freqs)
    linear.set_xlabel("rank")
    linear.set_ylabel("frequency")
    linear.set_title("Term frequency")
    linear.grid(True, alpha=0.3)
    if termfreq:
        loglog.loglog(list(ranks), freqs, marker=".", linestyle="none")
    loglog.set_xlabel("rank (log)")
    loglog.set_ylabel("frequency (log)")
    loglog.set_title("Term frequency (log-log)")
    loglog.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    return _fig_to_svg(plt, fig)
