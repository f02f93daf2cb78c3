# coding=utf-8
# Copyright 2022 The Carlitz-Periods Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Setup script for carlitz-periods."""

from setuptools import find_packages
from setuptools import setup

_VERSION = '0.1.0'

long_description = """
# Carlitz periods

Multiple zeta values, Carlitz multiple polylogarithms and the period matrices
of the associated t-motives over F_q[θ], computed to a chosen θ-adic precision,
together with a search for linear relations among them.
"""

setup(
    name='carlitz-periods',
    version=_VERSION,
    include_package_data=True,
    packages=find_packages(),
    install_requires=[
        'absl-py',
        'fiddle',
        'numpy',
    ],
    extras_require={
        'testing': [
            'galois',
            'pytest',
        ],
    },
    entry_points={
        'console_scripts': ['carlitz=carlitz.cli.main:run'],
    },
    description='Periods of t-motives attached to function field MZVs',
    long_description=long_description,
    long_description_content_type='text/markdown',
    license='Apache 2.0',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    keywords='function field multiple zeta values t-motives periods',
)
