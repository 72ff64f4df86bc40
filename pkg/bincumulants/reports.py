"""Report documents printed by the command line.

Each report is a ``schematics`` model; :func:`to_document` validates it and
returns the primitive form with unset fields removed.
"""
from schematics.exceptions import DataError
from schematics.models import Model
from schematics.types import BooleanType, DictType, FloatType, IntType, ListType, ModelType, StringType

from .exceptions import ValidationError
from .transforms import Coords, convert, zgrade
from .utils import drop_none, format_rational, subset_label

__all__ = [
    'PolynomialReport', 'OrbitReport', 'CensusReport', 'ModelReport', 'MembershipReport',
    'OptimizerReport', 'to_document', 'polynomial_report', 'census_report', 'membership_report',
    'optimizer_report'
]


class PolynomialReport(Model):
    n = IntType(required=True)
    terms = IntType(required=True)
    zdeg = ListType(IntType())
    degrees = ListType(IntType())
    polynomial = StringType()
    value = StringType()


class OrbitReport(Model):
    m = IntType(required=True)
    representative = ListType(StringType(), required=True)
    orbit_size = IntType(required=True)
    codimension = IntType()


class CensusReport(Model):
    n = IntType(required=True)
    filter = StringType(required=True)
    m_range = ListType(IntType())
    counts = ListType(IntType(), required=True)
    total = IntType(required=True)
    orbits = ListType(ModelType(OrbitReport))


class ModelReport(Model):
    n = IntType(required=True)
    subsets = ListType(StringType())
    csi = ListType(StringType())
    action = StringType(required=True)
    codimension = IntType()
    params = ListType(StringType())
    coordinates = DictType(StringType())
    fixture = StringType()
    mode = StringType()
    verdicts = ListType(BooleanType())
    vanishes = BooleanType()


class MembershipReport(Model):
    n = IntType(required=True)
    member = BooleanType(required=True)
    violated = ListType(StringType())
    witness = StringType()
    probabilities = DictType(StringType())


class OptimizerReport(Model):
    n = IntType(required=True)
    best_value = FloatType(required=True)
    exact_value = StringType()
    argmax = DictType(StringType())
    certified = BooleanType()
    start_index = IntType()
    starts = IntType(required=True)
    seed = IntType(required=True)
    tolerance = FloatType()
    flip = StringType()


def to_document(report):
    """Validate ``report`` and return its primitive dict.

    :raises ValidationError: when the report fails its own schema
    """
    try:
        report.validate()
    except DataError as e:
        raise ValidationError('invalid {}: {}'.format(report.__class__.__name__, e))
    return drop_none(report.to_primitive())


def _entries(t):
    return {subset_label(mask): format_rational(value) for mask, value in t.items()}


def polynomial_report(poly, n, listing=True):
    grade = zgrade(poly, n)
    return PolynomialReport({
        'n': n,
        'terms': len(poly),
        'zdeg': list(grade) if isinstance(grade, tuple) else None,
        'degrees': poly.degrees(),
        'polynomial': str(poly) if listing else None,
    })


def census_report(census):
    return CensusReport({
        'n': census.n,
        'filter': census.filter,
        'm_range': list(census.m_range) if census.m_range else None,
        'counts': census.counts(),
        'total': census.total,
        'orbits': [{
            'm': e.m,
            'representative': list(e.representative),
            'orbit_size': e.orbit_size,
            'codimension': e.codimension,
        } for e in census.entries],
    })


def membership_report(pt, membership):
    return MembershipReport({
        'n': pt.n,
        'member': membership.member,
        'violated': [subset_label(mask) for mask in membership.violated],
        'witness': None if membership.witness is None else subset_label(membership.witness),
        'probabilities': _entries(membership.probabilities),
    })


def optimizer_report(result):
    return OptimizerReport({
        'n': result.n,
        'best_value': result.best_value,
        'exact_value': format_rational(result.exact_value),
        'argmax': _entries(convert(result.argmax, Coords.PROB)),
        'certified': result.certified,
        'start_index': result.start_index,
        'starts': result.starts,
        'seed': result.seed,
        'tolerance': result.tolerance,
        'flip': subset_label(result.flip) or '{}',
    })
