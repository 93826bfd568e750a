import setuptools

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

__pkginfo__ = {}
with open("metajacobi/__pkginfo__.py") as fh:
    exec(fh.read(), __pkginfo__)

install_requires = [
    'readstr>=0.5.0',
    'numpy>=1.20.0',
    'pandas>=1.5.0',  # first version accepting lineterminator in to_csv
]

tests_require = ['pytest'] + install_requires

setuptools.setup(
    name="metajacobi",
    version=__pkginfo__['__version__'],
    description="Askey biorthogonal polynomials, the meta-Jacobi algebra and numerical verification of their identities",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=['tests']),
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    extras_require={
        'dev': tests_require,
    },
    entry_points={
        'console_scripts': ['metajacobi=metajacobi.cli:main'],
    },
    python_requires='>=3.8',
    tests_require=tests_require,
    install_requires=install_requires,
)
