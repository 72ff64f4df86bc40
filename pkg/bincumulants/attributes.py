"""Attribute codecs for the JSON documents read and written by the command line.

Every attribute converts between the primitive JSON value and the richer
Python value in both directions, and validates with ``voluptuous``.
"""
from fractions import Fraction
import json

from voluptuous import Schema
import voluptuous.validators as v
from voluptuous.error import Invalid

from .exceptions import SchemaError
from .transforms import BinaryTable, Coords
from .utils import MAX_DENOMINATOR, format_rational, is_empty, parse_rational, parse_subset, subset_label


__all__ = [
    'Attribute', 'Integer', 'Rational', 'Subset', 'Choice', 'Dict', 'TableDocument',
    'table_to_json', 'table_from_json', 'read_table', 'dumps'
]


class Attribute:
    """
    Basic attribute from which other attributes should extend.
    It applies no conversion by default.
    """
    primitive_type = None
    python_type = None

    def __init__(self, required=False, validator=None, default=None, name=None):
        """

        :param bool required:
        :param callable validator: a voluptuous validator run on the loaded value
        :param default:
        :param str name: used in error messages
        """
        self._default = default
        self.required = required
        self.validator = validator
        self.name = name

    def _add_validator(self, *args):
        validators = [x for x in [self.validator] + list(args) if x is not None]
        if not validators:
            self.validator = None
        elif len(validators) == 1:
            self.validator = validators[0]
        else:
            self.validator = v.And(*validators)

    def __repr__(self):
        return '{}({})'.format(self.__class__.__name__, self.name or '')

    @property
    def default(self):
        if callable(self._default):
            return self._default()
        return self._default

    def _error(self, msg, value):
        return SchemaError(msg, name=self.name or self.__class__.__name__.lower(), value=value)

    def validate(self, value):
        """Load untrusted data and validate it."""
        if value is None:
            if self.required:
                raise self._error('value is required', value)
            return self.default

        pt = self.python_type
        if pt is None or not isinstance(value, pt):
            value = self.load(value)

        if self.validator:
            try:
                value = self.validator(value)
            except Invalid as e:
                raise self._error(e.msg, value)

        return self._validate(value)

    def load(self, value):
        """Convert untrusted data to a richer Python construct."""
        if value is None:
            return value
        return self._load(value)

    def dump(self, value):
        """Convert internal data to a JSON-safe value."""
        value = self.validate(value)
        if value is None:
            return value
        return self._dump(value)

    def _validate(self, value):
        return value

    def _load(self, value):
        if self.python_type is None or isinstance(value, self.python_type):
            return value
        try:
            return self.python_type(value)
        except (TypeError, ValueError):
            raise self._error('expected {}'.format(self.python_type.__name__), value)

    def _dump(self, value):
        if self.primitive_type is None:
            return value
        return self.primitive_type(value)


class Integer(Attribute):
    """An integer in an optional closed range"""
    primitive_type = int
    python_type = int

    def __init__(self, min_value=None, max_value=None, **kwargs):
        super().__init__(**kwargs)
        self._add_validator(v.Range(min=min_value, max=max_value))

    def _load(self, value):
        if isinstance(value, bool) or isinstance(value, float) and not value.is_integer():
            raise self._error('expected an integer', value)
        return super()._load(value)

    def _validate(self, value):
        if isinstance(value, bool):
            raise self._error('expected an integer', value)
        return value


class Rational(Attribute):
    """
    An exact rational, written ``"p/q"``.

    Floats are accepted on input and rationalized with denominators up to
    ``max_denominator``.
    """
    primitive_type = str
    python_type = Fraction

    def __init__(self, max_denominator=MAX_DENOMINATOR, **kwargs):
        super().__init__(**kwargs)
        self.max_denominator = max_denominator

    def _load(self, value):
        return parse_rational(value, self.max_denominator)

    def _dump(self, value):
        return format_rational(value)


class Subset(Attribute):
    """A subset of ``[n]`` written as increasing element digits; ``""`` is the empty set"""
    primitive_type = str
    python_type = int

    def __init__(self, n, **kwargs):
        super().__init__(**kwargs)
        self.n = n

    def validate(self, value):
        if isinstance(value, str) or value is None:
            return super().validate(value)
        raise self._error('subset labels are strings', value)

    def _load(self, value):
        return parse_subset(value, self.n)

    def _validate(self, value):
        if not 0 <= value < 1 << self.n:
            raise self._error('out of range for n={}'.format(self.n), value)
        return value

    def dump(self, value):
        return subset_label(value)


class Choice(Attribute):
    """One of a fixed set of strings"""
    primitive_type = str
    python_type = str

    def __init__(self, choices, **kwargs):
        super().__init__(**kwargs)
        self.choices = tuple(choices)
        self._add_validator(v.In(self.choices, msg='expected one of {}'.format(', '.join(self.choices))))


class Dict(Attribute):
    """
    A mapping with a fixed set of attributes.

    Unknown keys raise :py:class:`~bincumulants.exceptions.SchemaError`
    unless ``extra`` is true.
    """
    primitive_type = dict
    python_type = dict

    def __init__(self, attributes, extra=False, **kwargs):
        super().__init__(**kwargs)
        for key, attr in attributes.items():
            if not isinstance(attr, Attribute):
                raise ValueError('all attribute values must be instances of :class:`Attribute`')
            if attr.name is None:
                attr.name = key
        self.attributes = attributes
        self.extra = extra

    def _run(self, value, method):
        if not isinstance(value, dict):
            raise self._error('expected an object', value)
        unknown = set(value) - set(self.attributes)
        if unknown and not self.extra:
            raise self._error('unknown keys {}'.format(sorted(unknown)), value)
        return {k: getattr(attr, method)(value.get(k)) for k, attr in self.attributes.items()}

    def validate(self, value):
        if value is None:
            return super().validate(value)
        return self._run(value, 'validate')

    def dump(self, value):
        return self._run(value, 'dump')


class TableDocument(Attribute):
    """
    ``{"n": 2, "coords": "prob", "entries": {"": "1/4", "1": "1/4", ...}}``.

    Entries missing from the document are 0. The normalization of the
    coordinate system is enforced when the table is built.
    """
    python_type = BinaryTable

    def __init__(self, max_n=6, max_denominator=MAX_DENOMINATOR, **kwargs):
        super().__init__(**kwargs)
        self.header = Dict({
            'n': Integer(min_value=1, max_value=max_n, required=True),
            'coords': Choice([c.value for c in Coords], required=True),
            'entries': Attribute(required=True, validator=Schema(dict)),
        }, name=self.name or 'table')
        self.max_denominator = max_denominator

    def _load(self, value):
        header = self.header.validate(value)
        n = header['n']
        key = Subset(n, name='subset')
        number = Rational(self.max_denominator, name='entry')
        mapping = {}
        for label, raw in header['entries'].items():
            mask = key.validate(label)
            if mask in mapping:
                raise self._error('subset listed twice', label)
            mapping[mask] = number.validate(raw)
        return BinaryTable.from_dict(n, header['coords'], mapping)

    def _dump(self, t):
        return {
            'n': t.n,
            'coords': t.coords.value,
            'entries': {subset_label(mask): format_rational(value) for mask, value in t.items()},
        }


_TABLE = TableDocument()


def table_to_json(t):
    """JSON-ready dict of a rational table"""
    return _TABLE.dump(t)


def table_from_json(doc, max_denominator=MAX_DENOMINATOR):
    """
    Build a :py:class:`~bincumulants.transforms.BinaryTable` from a parsed document.

    :raises SchemaError: for malformed documents
    :raises CoordinateError: when the entries break the normalization
    """
    if is_empty(doc):
        raise SchemaError('empty table document')
    if max_denominator != MAX_DENOMINATOR:
        return TableDocument(max_denominator=max_denominator).validate(doc)
    return _TABLE.validate(doc)


def read_table(path, max_denominator=MAX_DENOMINATOR):
    try:
        with open(path) as fp:
            doc = json.load(fp)
    except OSError as e:
        raise SchemaError('cannot read {}: {}'.format(path, e.strerror))
    except ValueError as e:
        raise SchemaError('{} is not valid JSON: {}'.format(path, e))
    return table_from_json(doc, max_denominator)


def dumps(doc):
    """Deterministic JSON text: sorted keys, two space indent"""
    return json.dumps(doc, sort_keys=True, indent=2)
