"""Orbit lengths of odd-order matrix groups on nonzero vectors.

An odd-order group acting on the nonzero vectors of a space over an odd
prime field always repeats an orbit length: v and -v lie in distinct orbits
of the same size whenever the group has no element sending v to -v.  The
scan below watches that happen for every odd-order subgroup of GL(1, p),
p up to 31, and of GL(2, 3).
"""

from collections import Counter

from groupchar.actions import (
    dade_duplicate_check,
    negation_pairing,
    odd_order_subgroup_actions,
    orbit_sizes,
)

for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
    for action in odd_order_subgroup_actions(p, 1):
        sizes = orbit_sizes(action)
        dup = dade_duplicate_check(action)
        neg = negation_pairing(action)
        counts = dict(sorted(Counter(sizes).items()))
        print(f"GL(1,{p:>2}) subgroup of order {action.group_order:>2}: "
              f"orbit sizes {counts}  duplicate={dup} negation-paired={neg}")

print()
for action in odd_order_subgroup_actions(3, 2):
    sizes = orbit_sizes(action)
    dup = dade_duplicate_check(action)
    print(f"GL(2,3) subgroup of order {action.group_order}: "
          f"orbit sizes {sizes}  duplicate={dup}")
