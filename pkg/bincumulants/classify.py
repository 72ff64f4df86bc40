"""Orbits of hidden subset models under the symmetry group of the n-cube.

A collection ``A`` of subsets of ``[n]`` is encoded as a ``2^n`` bit integer
with bit ``J`` set for every ``J`` in ``A``. The canonical form of a model
is the smallest code in its orbit.
"""
from collections import Counter, namedtuple
import logging

from .combinatorics import cube_group
from .exceptions import UnsupportedSizeError, ValidationError
from .models import HiddenSubsetModel, hsm_to_csi, model_codimension
from .utils import popcount, subset_label

__all__ = [
    'is_nondegenerate', 'satisfies_a1_a2', 'canonical_form', 'collection_code',
    'collection_subsets', 'orbit_of', 'classify', 'census_counts', 'Census', 'OrbitEntry',
    'FILTERS'
]

logger = logging.getLogger(__name__)

MAX_N = 4

FILTERS = ('nondeg', 'a1a2', 'none')


OrbitEntry = namedtuple('OrbitEntry', ['m', 'code', 'representative', 'orbit_size', 'codimension'])


class Census(object):
    """Orbit representatives of one classification run, sorted by ``(m, code)``"""
    def __init__(self, n, filter, entries, m_range=None):
        self.n = n
        self.filter = filter
        self.m_range = m_range
        self.entries = sorted(entries, key=lambda e: (e.m, e.code))

    def counts(self):
        """Number of orbits per ``m``, for ``m = 1 .. 2^n``"""
        c = Counter(e.m for e in self.entries)
        return [c.get(m, 0) for m in range(1, (1 << self.n) + 1)]

    @property
    def total(self):
        return len(self.entries)

    def models(self):
        return [HiddenSubsetModel(self.n, collection_subsets(e.code)) for e in self.entries]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def collection_code(h):
    code = 0
    for J in h.subsets:
        code |= 1 << J
    return code


def collection_subsets(code):
    """Subset masks of a collection code, ascending"""
    out = []
    J = 0
    while code:
        if code & 1:
            out.append(J)
        code >>= 1
        J += 1
    return out


def _nondegenerate_code(code, n):
    inside = 0
    outside = 0
    full = (1 << n) - 1
    for J in collection_subsets(code):
        inside |= J
        outside |= full ^ J
    return inside == full and outside == full


def is_nondegenerate(h):
    """True iff every coordinate is 1 on some hidden subset and 0 on another"""
    return _nondegenerate_code(collection_code(h), h.n)


def satisfies_a1_a2(c):
    """Check the two assumptions on a CSI split model.

    Every split has two nonempty blocks, and no two hidden classes fall in
    the same block of every split.
    """
    full = (1 << c.m) - 1
    if any(first in (0, full) for first in c.splits):
        return False
    signatures = set()
    for l in range(c.m):
        signature = tuple(first >> l & 1 for first in c.splits)
        if signature in signatures:
            return False
        signatures.add(signature)
    return True


def _image(g, code):
    image = 0
    for J in collection_subsets(code):
        image |= 1 << g.apply(J)
    return image


def orbit_of(h):
    """Set of collection codes in the orbit of ``h``"""
    code = collection_code(h)
    return {_image(g, code) for g in cube_group(h.n)}


def canonical_form(h):
    """The orbit member with the smallest collection code, subsets ascending"""
    return HiddenSubsetModel(h.n, collection_subsets(min(orbit_of(h))))


class _Action(object):
    """Byte lookup tables for the action of the whole group on collection codes"""
    def __init__(self, n):
        self.n = n
        self.width = 1 << n
        self.chunks = (self.width + 7) // 8
        self.tables = []
        for g in cube_group(n):
            per_chunk = []
            for chunk in range(self.chunks):
                row = [0] * 256
                for byte in range(1, 256):
                    image = 0
                    for j in range(8):
                        J = 8 * chunk + j
                        if byte >> j & 1 and J < self.width:
                            image |= 1 << g.apply(J)
                    row[byte] = image
                per_chunk.append(row)
            self.tables.append(per_chunk)

    def orbit(self, code):
        out = set()
        for per_chunk in self.tables:
            image = 0
            rest = code
            for row in per_chunk:
                image |= row[rest & 255]
                rest >>= 8
            out.add(image)
        return out


def _passes(code, n, filter):
    if filter == 'none':
        return True
    if filter == 'nondeg':
        return _nondegenerate_code(code, n)
    return satisfies_a1_a2(hsm_to_csi(HiddenSubsetModel(n, collection_subsets(code))))


def _check(n, filter, m_range):
    if not 1 <= n <= MAX_N:
        raise UnsupportedSizeError(n, 1, MAX_N, 'classify')
    if filter not in FILTERS:
        raise ValidationError('unknown filter {!r}; expected one of {}'.format(filter, ', '.join(FILTERS)))
    if m_range is not None:
        low, high = m_range
        if low > high or low < 1:
            raise ValidationError('bad range of hidden classes {}..{}'.format(low, high))


def _walk(n):
    """Yield ``(canonical code, orbit size)`` for every orbit of nonempty collections"""
    action = _Action(n)
    top = 1 << (1 << n)
    seen = bytearray(top)
    for code in range(1, top):
        if seen[code]:
            continue
        orbit = action.orbit(code)
        for member in orbit:
            seen[member] = 1
        yield min(orbit), len(orbit)


def classify(n, m_range=None, filter='nondeg', codimension=False, seed=0):
    """Orbit census of hidden subset models.

    :param m_range: inclusive ``(low, high)`` bounds on ``|A|``, or ``None``
    :param filter: ``"nondeg"``, ``"a1a2"`` or ``"none"``
    :param codimension: attach :func:`~bincumulants.models.model_codimension` to each orbit
    :raises UnsupportedSizeError: for ``n > 4``
    """
    _check(n, filter, m_range)
    entries = []
    for code, size in _walk(n):
        m = popcount(code)
        if m_range is not None and not m_range[0] <= m <= m_range[1]:
            continue
        if not _passes(code, n, filter):
            continue
        subsets = collection_subsets(code)
        codim = model_codimension(HiddenSubsetModel(n, subsets), seed=seed) if codimension else None
        entries.append(OrbitEntry(m, code, tuple(subset_label(J) for J in subsets), size, codim))
    logger.info('n=%d filter=%s: %d orbits', n, filter, len(entries))
    return Census(n, filter, entries, m_range)


def census_counts(n, filter='nondeg'):
    """Per-``m`` orbit counts with and without the filter, side by side"""
    _check(n, filter, None)
    unfiltered = Counter()
    filtered = Counter()
    for code, _ in _walk(n):
        m = popcount(code)
        unfiltered[m] += 1
        if _passes(code, n, filter):
            filtered[m] += 1
    width = 1 << n
    return {
        'unfiltered': [unfiltered.get(m, 0) for m in range(1, width + 1)],
        'filtered': [filtered.get(m, 0) for m in range(1, width + 1)],
    }
