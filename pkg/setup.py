# Copyright 2024 The csmtutte developers
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

from setuptools import setup, find_packages


def readme():
    with open('README.md', 'r') as f:
        return f.read()


setup(
    name='csmtutte',
    version='0.1.0',
    description=('Chern-Schwartz-MacPherson cycles of matroids and Tutte '
                 'polynomial coefficients, in exact arithmetic'),
    long_description=readme(),
    long_description_content_type='text/markdown',
    license='Apache 2.0',
    packages=find_packages(exclude=('tests',)),
    include_package_data=True,
    package_data={'csmtutte': ['resources/*.yaml']},
    install_requires=[
        'click',
        'networkx',
        'numpy',
        'pandas',
        'psutil',
        'pyyaml',
        'ray',
        'sympy',
        'tqdm',
    ],
    extras_require={
        'tests': ['pytest'],
    },
    python_requires='>=3.8',
    entry_points='''
        [console_scripts]
        csmtutte=csmtutte.cli:cli
    ''',
    zip_safe=False
)
