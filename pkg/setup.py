#!/usr/bin/python

# setuptools setup module.

from setuptools import setup
# To use a consistent encoding
from codecs import open
from os import path
# To scrape version information
import re

def find_version(file_path):
    """
    Scrape version information from specified file path.

    """
    with open(file_path, 'r') as f:
        file_contents = f.read()
    version_match = re.search(r"^__version__\s*=\s*['\"]([^'\"]*)['\"]",
                              file_contents, re.M)
    if version_match:
        return version_match.group(1)
    else:
        raise RuntimeError("unable to find version string")

here = path.abspath(path.dirname(__file__))

# Get long description
with open(path.join(here, 'README.rst'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='Color-Avoid',

    version=find_version(path.join(here, 'coloravoid', '__init__.py')),

    description='Color-avoiding connectivity checks and sparsifiers',
    long_description=long_description,

    url='',

    license='MIT',

    classifiers=[
        'Development Status :: 4 - Beta',

        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',

        'License :: OSI Approved :: MIT License',

        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
    ],

    keywords='graph connectivity edge coloring vertex coloring matroid '
             'approximation',

    packages=['coloravoid'],

    install_requires=['numpy>=1.17.0',
                      'pandas>=1.0.0',
                      'openpyxl>=3.0.0',
                      'networkx>=2.4',
                      'pydot>=1.4.1'],

    # $ pip install -e .[test]
    extras_require={
        'test': ['hypothesis>=5.0.0'],
    },

    # Instance and order files
    package_data={
        'coloravoid': ['data/*.ecg',
                       'data/*.vcg',
                       'data/*.mat',
                       'data/*.order'],
    },

    entry_points={
        'console_scripts': [
            'coloravoid=coloravoid.cli:main',
        ],
    },
)
