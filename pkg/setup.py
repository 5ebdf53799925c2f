#
# pitwo: reversible programs over finite types, and the 2-level theory of the boolean fragment
#

# To use this command to install and yet be able to edit the code (here). Great for dev:
#
#   pip install --editable .[cli]
#
# and for the test suite (in ./testing):
#
#   pip install -r requirements.txt
#
from setuptools import setup

# these minimum versions are tested, some earlier values would probably work too.
requirements = [
    'lark>=1.1.5',
]

cli_requirements = [
    'click>=8.0.3',
]

with open("README.md", "r") as fh:
    long_description = fh.read()

from pitwo import __version__

setup(
    name='pitwo',
    version=__version__,
    packages=[ 'pitwo' ],
    package_data={ 'pitwo': [ 'data/*.pid' ] },
    python_requires='>=3.8',
    install_requires=requirements,
    extras_require={
        'cli': cli_requirements,
    },
    description="A small reversible language, its groupoid model, and proofs between them",
    long_description=long_description,
    long_description_content_type="text/markdown",
    entry_points='''
        [console_scripts]
        pitwo=pitwo.cli:main
    ''',
    classifiers=[
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
    ],
)

