"""The randomized cross-validation harness, driven from the library.

The same suite backs ``eulerchi verify``; every check is an exact integer
equality between two independently computed routes.
"""

from eulerchi import harness

result = harness.run_suite(seed=2024, cases=40)

print(f"seed {result.seed}, {result.cases} cases,",
      "all checks passed" if result.passed else "FAILURES FOUND")
print("\nchecks run:")
for name in sorted(result.checks_run):
    print(f"  {name:32s} {result.checks_run[name]}")

if not result.passed:
    for failure in result.failures:
        print("FAIL", failure.name, failure.lhs, "!=", failure.rhs)

# A deliberately injected fault shows what a real disagreement would look
# like: the suite stops at the first failing case and shrinks it.
broken = harness.run_suite(seed=2024, cases=10, inject_fault="lambda_plus_one")
print("\nwith an injected fault the suite reports:", broken.failing_spec["check"])
print("shrunk counterexample:", broken.failing_spec["instance"])
