"""Put the bundled uncertainty measures through the axiom battery."""

from orderctx import HARTLEY, SHANNON, linear_combo, verify_axioms

AXIOMS = (
    "expansibility",
    "symmetry",
    "subadditivity",
    "additivity",
    "normalization",
    "monotone_on_order",
)

candidates = [
    SHANNON,
    HARTLEY,
    linear_combo(0.5, 0.5),
    linear_combo(2.0, 0.0),  # deliberately mis-scaled: fails normalization
]

for measure in candidates:
    report = verify_axioms(measure, sample_count=2000, seed=17)
    verdict = "ok" if report.all_passed() else "FAILED"
    print(f"{report.measure:<40} {verdict}")
    for name in AXIOMS:
        check = getattr(report, name)
        mark = "pass" if check.passed else "FAIL"
        print(f"    {name:<20} {mark}")
        if not check.passed:
            print(f"        witness: {check.witness!r}")
    print()

print("every check is seeded, so a red line here reproduces exactly")
