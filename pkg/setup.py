import os

import setuptools  # type: ignore

with open("README.rst", "r") as fh:
    long_description = fh.read()


with open("requirements.txt", "r") as fh:
    install_requires = [line.strip(os.linesep) for line in fh.readlines()]


setuptools.setup(
    name="percorsi",
    version="1.0.0",
    description="Basis path sets of layered fully connected networks.",
    long_description=long_description,
    long_description_content_type="text/x-rst",
    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
    package_data={"percorsi": ["py.typed"]},
    install_requires=install_requires,
    entry_points={"console_scripts": ["percorsi = percorsi.cli:main"]},
    classifiers=[
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">= 3.7",
    tests_require=["pytest", "hypothesis", "numpy", "networkx"],
)
