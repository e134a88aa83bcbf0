"""
Unit and regression test for the tailscore package.
"""

# Import package, test suite, and other packages as needed
import sys
import tailscore


def test_tailscore_imported():
    """Sample test, will always pass so long as import statement worked"""
    assert "tailscore" in sys.modules


def test_version_and_webs():
    assert isinstance(tailscore.__version__, str)
    assert tailscore.__github_issues_web__.startswith(tailscore.__github_web__)


def test_demo_files_exist():
    import os
    from tailscore import demo
    for path in (demo.u4_sample_file, demo.u4_forecasts_file, demo.u4_forecasts_naive_file, demo.fz_family_file):
        assert os.path.isfile(path)


def test_version_comes_from_versioneer():
    from tailscore._version import get_versions
    versions = get_versions()
    assert tailscore.__version__ == versions['version']
    assert hasattr(tailscore, '__git_revision__')
