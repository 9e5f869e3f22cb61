"""Logging and run bookkeeping for command-line runs.
"""
import json
import logging
import os
import shutil

from cutcomplex.complexes.shared_definition import REPORT_FORMAT


def get_logger(
    log_dir=None,
    name="cutcomplex",
    level=logging.INFO,
    log_file_name="log.txt",
):
    """Get a logger that writes to stderr and, given log_dir, a log file.
    Args:
        log_dir: str or None, log directory to save logs.
        name: str, name of the logger instance.
        level: logging level.
        log_file_name: str, name of the log file to output.
    Returns:
        a logger instance
    """
    logger = logging.getLogger(name)
    logger.setLevel(level)
    logger.handlers = []
    stream_handler = logging.StreamHandler()
    logger.addHandler(stream_handler)
    if log_dir is not None:
        os.makedirs(log_dir, exist_ok=True)
        file_handler = logging.FileHandler(
            os.path.join(log_dir, os.path.basename(log_file_name))
        )
        logger.addHandler(file_handler)
    return logger


def save_params(args, log_dir):
    """Dump the parsed arguments to log_dir/params.json."""
    os.makedirs(log_dir, exist_ok=True)
    with open(os.path.join(log_dir, "params.json"), "w") as fh:
        json.dump(vars(args), fh, indent=2, default=str)


def snapshot_files(list_of_filenames, log_dir):
    """Copy the input files of a run into log_dir/inputs.
    Args:
        list_of_filenames: list of str.
        log_dir: str, log directory to save the copies in.
    """
    snap_dir = os.path.join(log_dir, "inputs")
    os.makedirs(snap_dir, exist_ok=True)
    for filename in list_of_filenames:
        target = os.path.join(snap_dir, os.path.basename(filename))
        shutil.copy2(filename, target)


def save_report(payload, path):
    """Write a JSON report tagged with the report format version.
    Args:
        payload: dict, report body.
        path: str, output path.
    """
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w") as fh:
        json.dump({"format": REPORT_FORMAT, **payload}, fh, indent=2)
