from setuptools import setup


def requirements(path):
    with open(path) as f:
        return f.read().splitlines()


setup(
    name="laplacian-realizer",
    version=open("VERSION").read().replace('\n', ''),
    description="Construct, decide and verify graphs realizing the "
                "Laplacian spectra S{i,j}n^m.",
    license="GPL",
    keywords="LAPLACIAN SPECTRUM INTEGRAL GRAPH REALIZABILITY GRAPH6",
    packages=['laplacian_realizer'],
    install_requires=requirements('requirements.txt'),
    tests_require=requirements('requirements-tests.txt'),
    entry_points={
        'console_scripts': [
            'lrealize = laplacian_realizer.cli:main',
        ]
    },
    package_data={
        'laplacian_realizer': ['*.txt', 'tables/*.txt'],
    },
    python_requires='>=3.7',
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU General Public License (GPL)",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
