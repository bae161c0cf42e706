"""Walk a few structures through the extension recipe and print what the
classifier says about the results.

Usage: python scripts/extend_demo.py
"""

from ordercuts import (
    Atom,
    CardSet,
    ComponentAssignment,
    ComponentKind,
    EMPTY,
    FieldDescriptor,
    GroupDescriptor,
    Residue,
    aleph,
    chain,
    check_side_conditions,
    classify_field,
    classify_group,
    completeness_predicates,
    extend_field,
    extend_group,
    extend_order,
)

A0, A1, A2 = aleph(0), aleph(1), aleph(2)


def show_order(label, term, k0, l0):
    ext = extend_order(term, k0, l0)
    comp = completeness_predicates(ext.term)
    conditions = ", ".join(str(c) for c in check_side_conditions(ext.term))
    print(f"{label}: mu={ext.mu} k1={ext.k1} l1={ext.l1}")
    print(f"  conditions: {conditions}")
    print(f"  symmetric={comp.symmetric} strong={comp.strong} extreme={comp.extreme}")


def main():
    print("-- order extensions --")
    show_order("empty order, k0=l0=aleph(1)", EMPTY, A1, A1)
    q_atom = Atom("q", A0, A0, CardSet.of(A0), CardSet.of(A0), A0)
    show_order("countable dense atom", q_atom, A1, A2)
    show_order("downgraded k0=aleph(0)", EMPTY, A0, A1)

    print("\n-- group extension: the integers --")
    z = GroupDescriptor(chain(1), ComponentAssignment(ComponentKind.INTEGERS),
                        spherical=True, discrete=True)
    print(f"input verdict:  {classify_group(z)}")
    once = extend_group(z)
    print(f"recipe: mu={once.recipe.mu}")
    print(f"output verdict: {classify_group(once.descriptor)}")
    twice = extend_group(once.descriptor)
    print(f"re-extended:    mu={twice.recipe.mu} -> "
          f"extreme={classify_group(twice.descriptor).extreme}")

    print("\n-- field extension: a rational-like field --")
    q = FieldDescriptor(GroupDescriptor.trivial(), Residue.PROPER)
    out = extend_field(q)
    print(f"recipe: mu={out.recipe.mu}")
    print(f"output verdict: {classify_field(out.descriptor)}")


if __name__ == "__main__":
    main()
