from setuptools import setup, find_packages


setup(
    name="lgallee",
    version="0.0.1.dev0",
    description="Bifurcation analysis of a Leslie-Gower predator-prey model with an additive Allee effect",
    long_description=open("README.md", encoding="utf-8").read(),
    long_description_content_type="text/markdown",
    author="PyLGA developers",
    classifiers=[
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords=["predator-prey", "Allee effect", "bifurcation", "normal form", "limit cycles"],
    install_requires=open("requirements.txt", "r").read().splitlines(),
    extras_require={"test": ["pytest"]},
    include_package_data=True,
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    entry_points={"console_scripts": ["lgallee=lgallee.cli:main"]},
    python_requires=">=3.9",
)
