#!/usr/bin/env python
# coding: utf8

from setuptools import setup, find_packages

# Get long_description from README
import os
here = os.path.dirname(os.path.abspath(__file__))
f = open(os.path.join(here, 'README.rst'))
long_description = f.read().strip()
f.close()

setup(
    name='hankelab',
    version='0.1.0',
    license='MIT',
    description='Weighted Hankel matrices with closed-form spectra, '
                'checked against their truncations.',
    long_description=long_description,
    packages = find_packages(exclude=('tests*',)),
    entry_points="""[console_scripts]\nhankelab = hankelab.script:run\n""",
    install_requires=['docopt>=0.4.1', 'numpy>=1.15', 'scipy>=1.0'],
    platforms='any',
    classifiers=[
        'Topic :: Scientific/Engineering :: Mathematics',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
    ]
)
