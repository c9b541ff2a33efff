"""Finite groups from tables, homomorphism enumeration, and abelianization."""

from eulerchi import (
    Presentation,
    abelianize_snf,
    centralizer,
    conj_orbit_count,
    conjugacy_classes,
    coset_action,
    hom_enumerate,
    quaternion_group,
    subgroup_closure,
    symmetric_group,
    validate_group,
)

# Any multiplication table with the identity at index 0 defines a group;
# validation checks the axioms and names the first failure.
z2 = validate_group([[0, 1], [1, 0]])
print("validated a group of order", z2.order)

s3 = symmetric_group(3)
print("\nconjugacy classes of S3 (rep, size):",
      [(c.rep, c.size) for c in conjugacy_classes(s3)])
print("conjugacy classes of Q8:", len(conjugacy_classes(quaternion_group())))

# Homomorphisms from a presented group are tuples of generator images
# satisfying every relator.  Two commuting generators pick out the
# commuting pairs.
pairs = hom_enumerate(Presentation.free_abelian(2), s3)
print("\ncommuting pairs in S3:", len(pairs))
orbits = conj_orbit_count(pairs, s3)
print("orbits under simultaneous conjugation:", orbits.count)
print("first three representatives:", orbits.reps[:3])

# Centralizers: a transposition commutes with 2 elements, a 3-cycle with 3.
print("\ncentralizer sizes:", len(centralizer(s3, (1,))), len(centralizer(s3, (3,))))

# Cosets of the subgroup generated by a transposition give the natural
# 3-point action.
sub = subgroup_closure(s3, [1])
ca = coset_action(s3, sub)
print("cosets of a 2-element subgroup:", len(ca.reps))

# Abelianization via the exponent-sum matrix: the quotient with relators
# a^2, b^2, (ab)^2 abelianizes to Z/2 x Z/2.
snf = abelianize_snf(Presentation(2, ((1, 1), (2, 2), (1, 2, 1, 2))))
print("\nabelianization: free rank", snf.rank, "torsion", list(snf.torsion))
