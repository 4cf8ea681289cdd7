from setuptools import find_packages, setup

setup(
    name="theta-spectra",
    version="0.1.0",
    description="Signless Laplacian spectral extremal problems for theta and friendship graphs.",
    long_description=open("README.md", encoding="utf-8").read(),
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.21",
        "networkx>=2.6",
    ],
    entry_points={
        "console_scripts": [
            "spectra=theta_spectra.cli:main",
        ],
    },
)
