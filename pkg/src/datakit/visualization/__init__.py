from .specs import (
    BoxStats,
    PlotSpec,
    box_stats,
    boxplot_spec,
    catbox_spec,
    confusion_spec,
    countplot_spec,
    fig_px,
    histogram_bins,
    histogram_spec,
    importance_spec,
    timeplot_spec,
)
from .svg import render_svg

__all__ = [
    "BoxStats", "PlotSpec", "box_stats", "boxplot_spec", "catbox_spec", "confusion_spec",
    "countplot_spec", "fig_px", "histogram_bins", "histogram_spec", "importance_spec",
    "render_svg", "timeplot_spec",
]
