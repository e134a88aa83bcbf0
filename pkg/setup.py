"""
TailScore
Identification and scoring functions for tail risk measures.
"""
import sys
from setuptools import setup, find_packages
import versioneer

short_description = __doc__.split("\n")

# from https://github.com/pytest-dev/pytest-runner#conditional-requirement
needs_pytest = {'pytest', 'test', 'ptr'}.intersection(sys.argv)
pytest_runner = ['pytest-runner'] if needs_pytest else []

try:
    with open("README.md", "r") as handle:
        long_description = handle.read()
except OSError:
    long_description = "\n".join(short_description[2:])


setup(
    name='tailscore',
    author='TailScore developers',
    version=versioneer.get_version(),
    cmdclass=versioneer.get_cmdclass(),
    packages=find_packages(),
    include_package_data=True,
    package_data={'tailscore': ['data/*.csv', 'data/*.json']},
    install_requires=['uibcdf_stdlib', 'numpy', 'scipy', 'pandas', 'statsmodels'],
    extras_require={'test': ['pytest', 'pytest-cov', 'hypothesis']},
    entry_points={'console_scripts': ['tailscore=tailscore.cli.main:main']},
    setup_requires=[] + pytest_runner,
    platforms=['Linux',
               'Mac OS-X',
               'Unix',
               'Windows',
    ],
    python_requires=">=3.8",
    url='https://tailscore.readthedocs.io',
    download_url='https://github.com/tailscore/tailscore',
    license='MIT',
    description=short_description[1],
    long_description=long_description,
    long_description_content_type="text/markdown",
)
