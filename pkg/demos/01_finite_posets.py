"""Walk a few small posets through the order-theoretic toolkit.

Each example prints the analysis report: directed-completeness, the maximal
and compact elements, and whether the approximation relation chains through
the order the way it should.
"""

from orderctx import FinitePoset

# the diamond: two routes from ignorance to certainty
diamond = FinitePoset.from_cover_relations(
    ["bottom", "left", "right", "top"],
    [("bottom", "left"), ("bottom", "right"), ("left", "top"), ("right", "top")],
)

# a three-way search, states labeled by what is still possible
search = FinitePoset.from_cover_relations(
    ["ABC", "AB", "AC", "BC", "A", "B", "C"],
    [
        ("ABC", "AB"), ("ABC", "AC"), ("ABC", "BC"),
        ("AB", "A"), ("AB", "B"),
        ("AC", "A"), ("AC", "C"),
        ("BC", "B"), ("BC", "C"),
    ],
)

# an antichain above a shared bottom, no top at all
fan = FinitePoset.from_cover_relations(
    ["root", "u", "v", "w"],
    [("root", "u"), ("root", "v"), ("root", "w")],
)


def describe(name, p):
    report = p.analyze()
    print(f"== {name} ({len(p.elements)} elements)")
    print("   dcpo:", report.is_dcpo)
    print("   maximal:", sorted(report.maximal_elements))
    print("   compact:", sorted(report.compact_elements))
    print("   approximation chains:", report.context_transitivity_holds)
    pairs = [(x, y) for x in p.elements for y in p.elements if x != y and p.way_below(x, y)]
    print("   strict way-below pairs:", pairs)
    print()


describe("diamond", diamond)
describe("search states", search)
describe("fan", fan)

# every element of a finite poset is compact, so the whole carrier is a basis
print("whole carrier is a basis:", search.is_basis(search.elements))
print("the two-element slice {'AB', 'A'} alone:", search.is_basis(["AB", "A"]))
print()

# the Hasse diagram travels well as DOT; render with `dot -Tpng`
print(diamond.to_dot())
