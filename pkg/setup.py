from setuptools import find_packages, setup

# "Import" __version__ from hypergt/__init__.py so the version has a
# single source.
__version__ = 'unknown'
for line in open('hypergt/__init__.py'):
    if line.startswith('__version__'):
        exec(line)
        break

setup(
    name='hypergt',
    version=__version__,
    description="Generalized group testing over hypergraphs: separating families, adaptive search and the 3-coloring reduction",
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',

    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
    ],
    keywords='group testing hypergraph separating family combinatorial search',

    packages=find_packages(exclude=['tests', 'examples', 'examples.*']),
    python_requires='>=3.10',

    install_requires=[
        'numpy>=1.24',
        'networkx>=3.0',
    ],
    extras_require={
        'test': ['pytest>=7.0', 'hypothesis>=6.80'],
    },
    entry_points={
        'console_scripts': ['hypergt=hypergt.cli.main:main'],
    },
)
