# Choices for command options and report fields

FIELD_RATIONALS = 'q'
FIELD_INTEGERS = 'z'

FIELD_CHOICES = [
    (FIELD_RATIONALS, 'Rationals'),
    (FIELD_INTEGERS, 'Integers'),
    ('fp:<p>', 'Prime field F_p'),
]

SHEAF_IDEAL = 'ideal'
SHEAF_STRUCTURE = 'structure'

SHEAF_CHOICES = [
    (SHEAF_IDEAL, 'Ideal sheaf I_Z(i)'),
    (SHEAF_STRUCTURE, 'Structure sheaf O_Z(i)'),
]

BOTT_DUALITY = 'duality'
BOTT_PRINTED = 'printed'

BOTT_TOP_ROW_CHOICES = [
    (BOTT_DUALITY, 'C(-i-1, n), consistent with Serre duality'),
    (BOTT_PRINTED, 'C(-i-n-1, n), regression sentinel'),
]

# What each command reproduces
PROVENANCE = {
    'hilb': 'Quotient dimension of a graded ideal piece over a field (surjectivity of the differential).',
    'quotient_z': 'Free rank and torsion of a graded quotient piece over Z.',
    'factorize': 'Cyclic matrix factorization A^d = b*I built from a sum-of-products decomposition.',
    'verify': 'Symbolic check of A^d = b*I and det(t*I - A) = (t^d - b)^r.',
    'pfaffian': 'Skew-symmetric form of the 4x4 doubling and its Pfaffian.',
    'ext_table': 'Normal bundle and ext dimensions of rank-2 Ulrich bundles on double solids.',
    'bott': 'Cohomology of line bundles on projective space.',
    'cover': 'Pushforward splitting, canonical twist and Ulrich invariants of a divisorial cover.',
    'ci': 'Koszul cohomology of (m, m) complete intersections.',
    'generic_check': 'Seeded genericity trials for b = p0^2 + p1*p2 + p3*p4.',
    'counts': 'Parameter-count inequalities for rank-1 and rank-2 Ulrich sheaves.',
    'selftest': 'Golden values and property checks.',
}
