# -*- coding: utf-8 -*-

from .config import Settings
from .exceptions import *
from .utils import *
from .combinatorics import *
from .algebra import *
from .transforms import *
from .generators import *
from .hyperdet import *
from .models import *
from .classify import *
from .cumulant_space import *

__version__ = '0.1'
