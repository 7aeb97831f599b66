from setuptools import setup, find_packages

setup(
    name="tablescene",
    version="0.0.0-alpha",
    python_requires=">=3.12",
    description="Scene graphs, training records and preference pairs for tabletop layouts",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    license="Apache License 2.0",
    include_package_data=True,
    packages=find_packages(exclude=["tests", "data", "data.*"]),
    package_data={"tablescene.records": ["prompts/*.txt"]},
    install_requires=[
        "numpy>=1.26",
        "scipy>=1.11",
        "pydantic>=2.5",
        "requests>=2.31",
    ],
    extras_require={
        "plot": ["matplotlib>=3.8"],
        "embed": ["sentence-transformers>=2.2"],
        "test": ["pytest>=8.0"],
    },
    entry_points={
        "console_scripts": ["tablescene=tablescene.cli:main"],
    },
    classifiers=[
        "Environment :: Console",
        "Programming Language :: Python :: 3.12",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: MacOS :: MacOS X",
        "Operating System :: POSIX :: Linux",
        "Operating System :: Microsoft :: Windows",
        "Intended Audience :: Developers",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Artificial Intelligence",
    ],
    zip_safe=False,
)
