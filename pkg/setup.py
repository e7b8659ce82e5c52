"""Setup instructions for the gradedlie package."""
import re
from pathlib import Path
from setuptools import setup

HERE = Path(__file__).resolve().parent
INIT = (HERE / 'gradedlie' / '__init__.py').read_text(encoding='utf-8')


def init_property(prop):
    """Return a dunder string such as __version__ from gradedlie/__init__.py."""
    match = re.search(r'{}\s*=\s*[\'"]([^\'"]*)[\'"]'.format(prop), INIT)
    return match.group(1)


setup(
    name='gradedlie',
    long_description=(HERE / 'README.rst').read_text(encoding='utf-8'),
    long_description_content_type='text/x-rst',
    version=init_property('__version__'),
    author=init_property('__author__'),
    author_email=init_property('__email__'),
    license=init_property('__license__'),
    url=init_property('__url__'),
)
