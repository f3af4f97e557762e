"""
Exporters for GridModal analysis results.

This module provides exporters for the machine-readable, report and plot outputs.
"""

from gridmodal.exporters.base import BaseExporter, format_float
from gridmodal.exporters.csv_exporter import CSVExporter
from gridmodal.exporters.report_exporter import ReportExporter


def exporter_factory(output_format: str, output_dir: str) -> BaseExporter:
    """
    Create an exporter instance for the specified output format.

    Args:
        output_format: Format to export ("csv", "report" or "svg")
        output_dir: Directory to write output files

    Returns:
        Instance of the appropriate exporter

    Raises:
        ValueError: If the output format is not supported
    """
    output_format = output_format.lower()

    if output_format == "csv":
        return CSVExporter(output_dir)
    elif output_format == "report":
        return ReportExporter(output_dir)
    elif output_format == "svg":
        # matplotlib is only imported when plots are requested
        from gridmodal.exporters.svg_exporter import SVGExporter

        return SVGExporter(output_dir)
    else:
        raise ValueError(f"Unsupported output format: {output_format}")


__all__ = [
    "BaseExporter",
    "CSVExporter",
    "ReportExporter",
    "exporter_factory",
    "format_float",
]
