"""Tests for core utility functions."""
from fractions import Fraction
from pathlib import Path

import pytest

from rlab.core.utils import (
    centered,
    default_eta,
    derive_seed,
    sen_domain_bound,
    validate_file_path,
)


class TestValidateFilePath:
    """Test cases for validate_file_path function."""

    def test_valid_existing_file(self, temp_dir):
        """Test validation of existing file."""
        test_file = temp_dir / "field.toml"
        test_file.write_text("p = 3")

        result = validate_file_path(str(test_file))
        assert isinstance(result, Path)
        assert result == test_file

        result = validate_file_path(test_file)
        assert result == test_file

    def test_valid_non_existing_file(self):
        """Test validation when must_exist=False."""
        non_existing = Path("non_existing_file.toml")

        result = validate_file_path(non_existing, must_exist=False)
        assert result == non_existing

    def test_file_not_found_error(self):
        """Test error when file doesn't exist and must_exist=True."""
        with pytest.raises(FileNotFoundError, match="File not found"):
            validate_file_path("non_existing_file.toml", must_exist=True)


class TestDeriveSeed:

    def test_deterministic(self):
        assert derive_seed(0, "arith") == derive_seed(0, "arith")

    def test_depends_on_label_and_seed(self):
        assert derive_seed(0, "arith") != derive_seed(0, "analytic")
        assert derive_seed(0, "arith") != derive_seed(1, "arith")

    def test_fits_in_64_bits(self):
        assert 0 <= derive_seed(12345, "kernel") < 2**64


class TestCentered:

    @pytest.mark.parametrize(
        "value,modulus,expected",
        [(0, 9, 0), (4, 9, 4), (5, 9, -4), (-1, 9, -1), (26, 27, -1), (13, 27, 13)],
    )
    def test_representatives(self, value, modulus, expected):
        assert centered(value, modulus) == expected


class TestDomainHelpers:

    def test_default_eta(self, f0, q5):
        assert default_eta(f0) == 3
        assert default_eta(q5) == 5

    def test_sen_domain_bound(self, f0, q5, cubic_embedding):
        assert sen_domain_bound(f0) == 1
        assert sen_domain_bound(q5) == Fraction(1, 2)
        assert sen_domain_bound(cubic_embedding.tower) == 1
