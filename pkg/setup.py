"""A setuptools based setup module.
See:
https://packaging.python.org/guides/distributing-packages-using-setuptools/
https://github.com/pypa/sampleproject
"""

# Always prefer setuptools over distutils
from setuptools import setup

setup(
    name="prop-hecke",
    version="0.1.0",
    description="Exact computations in pro-p Iwahori-Hecke algebras and their supersingular modules.",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    install_requires=[
        "loguru>=0.5.3",
        "tqdm>=4.56.1",
        "numpy>=1.20.0",
        "sympy>=1.8",
    ],
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Programming Language :: Python :: 3.8",
    ],
    packages=[
        "prophecke",
        "prophecke.combinatorics",
        "prophecke.algebra",
        "prophecke.modules",
        "prophecke.verification",
        "prophecke.utils",
    ],
    entry_points={
        "console_scripts": [
            "prop-hecke=prophecke.verification.cli:main",
        ],
    },
    python_requires=">=3.8, <4",
)
