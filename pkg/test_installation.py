#!/usr/bin/env python3
"""
Quick test to verify installation is working correctly

Runs standalone (python test_installation.py) or under pytest.
"""

import sys
from pathlib import Path


def test_imports():
    """Test that all required packages can be imported"""
    print("Testing imports...")

    required_packages = [
        ('yaml', 'pyyaml'),
        ('dotenv', 'python-dotenv'),
        ('rich', 'rich'),
        ('networkx', 'networkx'),
        ('joblib', 'joblib'),
    ]

    failed = []
    for module, package in required_packages:
        try:
            __import__(module)
            print(f"  ✓ {package}")
        except ImportError:
            print(f"  ✗ {package} - REQUIRED")
            failed.append(package)

    assert not failed, f"missing packages: {failed}"


def test_package():
    """Test that the package imports and answers a known question"""
    print("\nTesting poscodeg...")

    from poscodeg import get, min_positive_codegree, run_checks

    assert min_positive_codegree(get("H6")) == 2
    print("  ✓ δ⁺(H6) = 2")

    results = run_checks([{"type": "delta", "graph": "K2,2,2", "expect": 2}])
    assert results and results[0].passed, results
    print("  ✓ Check execution successful")


def test_yaml_loading():
    """Test that the acceptance suites can be loaded"""
    print("\nTesting acceptance suite loading...")

    from poscodeg.runners import discover_suites, load_suite

    paths = discover_suites(Path(__file__).parent / "acceptance")
    assert paths, "no acceptance suites found"
    for path in paths:
        suite = load_suite(path)
        assert suite.cases, f"{path.name} has no cases"
        print(f"  ✓ Loaded {len(suite.cases)} cases from {path.name}")


def test_results_dir(tmp_path=None):
    """Test that the results directory is writable"""
    print("\nTesting results directory...")

    from poscodeg.results import ResultsManager

    root = Path(tmp_path) if tmp_path is not None else Path("results")
    manager = ResultsManager(root)
    manager.results_dir.mkdir(parents=True, exist_ok=True)
    test_file = manager.results_dir / ".test_write"
    test_file.write_text("test")
    test_file.unlink()
    print("  ✓ Results directory is writable")


def main():
    print("=" * 60)
    print("poscodeg Installation Test")
    print("=" * 60)

    tests = [
        ("Package imports", test_imports),
        ("Package functionality", test_package),
        ("YAML loading", test_yaml_loading),
        ("Results directory", test_results_dir),
    ]

    failed = 0
    for name, test_func in tests:
        try:
            test_func()
        except Exception as e:
            print(f"  ✗ {name} failed: {e}")
            failed += 1

    print("\n" + "=" * 60)
    if failed == 0:
        print("✓ All tests passed! Installation is working correctly.")
        print("=" * 60)
        print("\nNext steps:")
        print("  1. Run: python run_poscodeg.py search -F K4- --n 5")
        print("  2. Check out QUICKSTART.md for more examples")
        print("  3. Run the acceptance suites: python run_poscodeg.py reproduce")
        return 0
    print(f"✗ {failed} test(s) failed. Please fix the issues above.")
    print("=" * 60)
    print("\nTroubleshooting:")
    print("  - Run: pip install -r requirements.txt")
    print("  - Make sure you're in the repository root")
    return 1


if __name__ == '__main__':
    sys.exit(main())
