#!/usr/bin/env python
# -*- coding: utf-8 -*-

import re
from setuptools import setup, find_packages


def find_version(fname):
    """Attempts to find the version number in the file names fname.
    Raises RuntimeError if not found.
    """
    version = ''
    with open(fname, 'r') as fp:
        reg = re.compile(r'__version__ = [\'"]([^\'"]*)[\'"]')
        for line in fp:
            m = reg.match(line)
            if m:
                version = m.group(1)
                break
    if not version:
        raise RuntimeError('Cannot find version information')
    return version


__version__ = find_version('bincumulants/__init__.py')


def read(fname):
    with open(fname) as fp:
        content = fp.read()
    return content


setup(
    name='bincumulants',
    version=__version__,
    description=(
        'Exact moments, cumulants and hyperdeterminants of binary tables, '
        'with hidden subset models and the space of cumulants'
    ),
    long_description=read('README.rst'),
    packages=find_packages(exclude=('test*', 'examples')),
    package_dir={'bincumulants': 'bincumulants'},
    include_package_data=True,
    license='MIT',
    zip_safe=False,
    keywords=(
        'cumulants', 'moments', 'hyperdeterminant', 'algebraic statistics',
        'binary random variables', 'exact arithmetic'
    ),
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        "Operating System :: OS Independent",
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering :: Mathematics'
    ],
    python_requires='>=3.8',
    test_suite='tests',
    entry_points={
        'console_scripts': ['bincumulants = bincumulants.cli:main']
    },
    install_requires=[
        'schematics',
        'voluptuous',
        'numpy',
        'scipy'
    ],
    tests_require=[
        'pytest'
    ]
)
