#!/usr/bin/env python

"""The setup script."""

from setuptools import find_packages, setup

with open("requirements.txt") as f:
    INSTALL_REQUIRES = f.read().strip().split("\n")

with open("README.md") as f:
    LONG_DESCRIPTION = f.read()

PYTHON_REQUIRES = ">=3.8"

description = "quantum generative adversarial networks for micro-aerial-vehicle navigation data"

setup(
    name="mav-qgan",
    description=description,
    long_description=LONG_DESCRIPTION,
    long_description_content_type="text/markdown",
    maintainer="mav-qgan developers",
    packages=find_packages(exclude=["tests", "examples"]),
    include_package_data=True,
    python_requires=PYTHON_REQUIRES,
    install_requires=INSTALL_REQUIRES,
    tests_require=["pytest", "hypothesis"],
    license="MIT",
    keywords="quantum, gan, navigation, spoofing",
    entry_points={"console_scripts": ["mav-qgan=mav_qgan.cli:main"]},
    use_scm_version={"version_scheme": "post-release", "local_scheme": "dirty-tag"},
    setup_requires=["setuptools_scm", "setuptools>=30.3.0"],
)
