"""Classify a Frobenius group over its kernel.

AGL(1, 5) is the affine line over GF(5): translations form the kernel N of
order 5, and the multiplicative group acts on it fixed-point-freely.  All
characters outside N's dual have distinct degrees, which puts the pair in
the doubly-transitive-Frobenius branch of the classifier; the printout
walks through the evidence the classifier checked on the way.
"""

from groupchar import agl1, classify_pair, compute_table

group = agl1(5)
kernel = group.minimal_normal_subgroups()[0]
report = classify_pair(group, kernel)

print(f"group: {group.label}  order {group.order}")
print(f"kernel order: {kernel.order}  (unique minimal normal subgroup)")
print()
print(f"degrees: {sorted(int(d) for d in compute_table(group).degrees)}")
print(f"distinct degrees off the kernel : {report.property_D}")
print(f"Camina pair (centralizer test)  : {report.camina_centralizer}")
print(f"Camina pair (vanishing test)    : {report.camina_vanishing}")
print(f"p'-elements act without fixed points: {report.pprime_fpf}")
print()
print(f"classification: {report.type}, case {report.residual_case}")
for key, value in sorted(report.evidence.items()):
    print(f"  {key} = {value}")
