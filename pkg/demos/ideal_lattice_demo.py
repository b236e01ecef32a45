"""Walkthrough: primitive-ideal data, sequence codes, and the inclusion order.

Run with:  python3 demos/ideal_lattice_demo.py
"""

from slinf import (
    AUGMENTATION_IDEAL,
    Ideal,
    ZERO_IDEAL,
    acc_measure,
    cls_union,
    containing_ideals,
    diagram_order_condition,
    family_hasse,
    highest_weight,
    is_contained,
    is_maximal,
)


def section(title):
    print(f"\n=== {title} ===")


section("Naming ideals")
examples = [ZERO_IDEAL, AUGMENTATION_IDEAL, Ideal(1, 0), Ideal(0, 1), Ideal(0, 0, (2,), (1,))]
for ideal in examples:
    print(f"  {ideal}   json={ideal.to_json()}")

section("Sequence codes (one per split of x)")
ideal = Ideal(2, 1, (2,), ())
print(f"codes of {ideal}:")
for code in sorted(cls_union(ideal), key=lambda c: c.sort_key()):
    print(f"  p={code.p.to_json()}  q={code.q.to_json()}")

section("Inclusion is decided through the codes")
pairs = [
    (Ideal(0, 1), AUGMENTATION_IDEAL),
    (Ideal(0, 0, (2,)), Ideal(0, 0, (1,))),
    (Ideal(0, 0, (1,)), Ideal(0, 0, (2,))),
    (Ideal(1, 1), Ideal(0, 0, (1, 1))),
]
for inner, outer in pairs:
    print(f"  {inner} <= {outer}?  {is_contained(inner, outer)}")

section("The printed closed form disagrees where y drops")
inner, outer = Ideal(0, 1), AUGMENTATION_IDEAL
print(f"  code route  : {inner} <= {outer} is {is_contained(inner, outer)}")
print(f"  printed form: {diagram_order_condition(inner, outer)} "
      "(zero-padding forces both slack variables to zero)")
print("  the 'tord-discrepancy' verify suite reports every such case")

section("Maximality and the chain measure")
print(f"  is_maximal({AUGMENTATION_IDEAL}) = {is_maximal(AUGMENTATION_IDEAL)}")
chain = [Ideal(1, 1, (2,), (1,)), Ideal(1, 1, (1,)), Ideal(1, 0), AUGMENTATION_IDEAL]
print("  an ascending chain with its strictly dropping measure:")
for ideal in chain:
    print(f"    {ideal}: measure {acc_measure(ideal)}")

section("Highest weights")
for ideal in [AUGMENTATION_IDEAL, Ideal(0, 0, (2,), (1,)), Ideal(1, 1), Ideal(2, 0, (3,))]:
    print(f"  {ideal}: {highest_weight(ideal)}")

section("Upsets are infinite; caps make them enumerable")
ideal = Ideal(1, 1)
print(f"ideals containing {ideal} with diagram width <= 2:")
for found in containing_ideals(ideal, 2):
    print(f"  {found}")

section("Hasse diagram of a tiny family (DOT)")
print(family_hasse(0, 0, 1, 1, "dot"))
