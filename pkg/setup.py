from setuptools import setup, find_packages
from codecs import open
from os import path

here = path.abspath(path.dirname(__file__))

# Get the long description from the README file
with open(path.join(here, 'README.rst'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='screenpipes',

    version='0.1.0',

    description='Accessibility trees from UI element detections',

    long_description=long_description,

    packages=["screenpipes", "screenpipes.input", "screenpipes.refinement",
              "screenpipes.semantics", "screenpipes.structure",
              "screenpipes.evaluation", "screenpipes.synthgen",
              "screenpipes.catalogue", "screenpipes.plotting"],

    include_package_data=True,

    install_requires=["numpy>=1.17", "scipy", "astropy", "matplotlib>=2.2.2",
                      "pandas", "loguru", "Pillow"],

    extras_require={"test": ["pytest"]},

    entry_points={
        "console_scripts": ["screenpipes=screenpipes.cli:main"]
    }
)
