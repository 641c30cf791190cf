# -*- coding: utf-8 -*-

from setuptools import setup, find_packages

setup(
    name="cyclac",
    version="0.1dev",
    description="Cyclotomic numbers of order 2l² and the cyclotomic matrix cryptosystem built on them",
    license="GPLv3",
    include_package_data=True,
    packages=find_packages("src"),
    package_dir={"": "src"},
    entry_points={ "console_scripts": ["cyclac = cyclac.main:main"], },
    python_requires=">=3.9",
    install_requires=[ "sympy" ],
    extras_require={ "test": [ "pytest" ], },
)
