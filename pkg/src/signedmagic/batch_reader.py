#!/usr/bin/env python3
"""Batch file reader for parameter triples to sweep."""

from pathlib import Path
from typing import List, Tuple

Triple = Tuple[int, int, int]


class ParamsFileReader:
    """Reader for batch files listing one m n k triple per line."""

    def read_params_from_file(self, file_path: str) -> Tuple[List[Triple], List[str]]:
        """
        Read parameter triples from a batch file.

        Fields may be separated by spaces or commas. Empty lines and lines
        starting with # are skipped.

        Args:
            file_path: Path to the batch file

        Returns:
            (triples, warnings) where warnings name the lines that were skipped

        Raises:
            FileNotFoundError: If the batch file doesn't exist
            IOError: If the file cannot be read
        """
        batch_path = Path(file_path)

        if not batch_path.exists():
            raise FileNotFoundError(f"Batch file not found: {file_path}")

        if not batch_path.is_file():
            raise IOError(f"Path is not a file: {file_path}")

        try:
            with batch_path.open("r", encoding="utf-8") as f:
                lines = f.readlines()
        except Exception as e:
            raise IOError(f"Failed to read batch file {file_path}: {e}")

        triples: List[Triple] = []
        warnings: List[str] = []
        for line_num, line in enumerate(lines, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue

            fields = line.replace(",", " ").split()
            try:
                m, n, k = (int(field) for field in fields)
            except ValueError:
                warnings.append(f"Line {line_num} is not an m n k triple: {line}")
                continue

            triples.append((m, n, k))

        return triples, warnings

    def validate_batch_file(self, file_path: str) -> Tuple[bool, str]:
        """
        Validate a batch file before processing.

        Args:
            file_path: Path to the batch file

        Returns:
            Tuple of (is_valid, message)
        """
        try:
            triples, _ = self.read_params_from_file(file_path)
            if not triples:
                return False, "Batch file contains no parameter triples"
            return True, f"Found {len(triples)} parameter triples in batch file"
        except FileNotFoundError as e:
            return False, str(e)
        except IOError as e:
            return False, str(e)
        except Exception as e:
            return False, f"Unexpected error validating batch file: {e}"
