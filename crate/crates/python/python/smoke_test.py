"""Quick check that the extension module loads and agrees with known values.

Build the module first, e.g. `maturin develop` in crates/python.
"""

import wpn

m = wpn.WeightMeasure("anb", [1, 2, 3])
prefix, factor = m.profile("nanaba")
assert prefix[1:] == [2, 3, 5, 6, 9, 10], prefix
assert factor[1:] == [3, 4, 6, 7, 9, 10], factor
assert m.is_prefix_normal("banana") and not m.is_prefix_normal("nanaba")
assert sorted(m.equivalence_class("banana")) == sorted(
    ["ananab", "anaban", "abanan", "nanaba", "nabana", "banana"]
)

std = wpn.WeightMeasure.standard("abc")
assert std.prefix_normal_form("bcac") == {"kind": "unique", "word": "cbbb", "count": 1}

ancb = wpn.WeightMeasure.parse("monoid = nat-sum\nletters = a n c b\nweights = 1 2 2 3\n")
form = ancb.prefix_normal_form("nanaba")
assert form["kind"] == "multiple" and form["count"] == 4
assert form["projected"] == "{b}{a}{n,c}{a}{n,c}{a}"
assert sorted(ancb.pn_set("nanaba")) == sorted(["banana", "bacana", "banaca", "bacaca"])
try:
    ancb.pn_set("nanaba", limit=3)
except wpn.CapacityExceeded:
    pass
else:
    raise AssertionError("limit not enforced")

gap = wpn.WeightMeasure("anx", [1, 2, 4]).prefix_normal_form("xaxn")
assert gap == {"kind": "none", "gap_index": 3, "count": 0}

primes = wpn.WeightMeasure("abc", [2, 3, 5], monoid="nat-product").classify()
assert primes["prime"] and not primes["gapfree"]
assert primes["gap_witness"] == ("cacb", 3)

pairs = wpn.WeightMeasure("abc", [(0, 2), (1, 1), (2, 0)], monoid="vec2-lex")
assert pairs.weights == [(0, 2), (1, 1), (2, 0)]
info = pairs.classify()
assert info["gapfree"] and info["stepped"] is None

sums = wpn.WeightMeasure("abc", [2, 4, 6])
products = wpn.WeightMeasure("abc", [2, 6, 18], monoid="nat-product")
assert sums.inequivalence_witness(products) is None
assert wpn.WeightMeasure("abc", [1, 2, 3]).inequivalence_witness(wpn.WeightMeasure("abc", [1, 2, 4])) == ("bb", "ac")

big = wpn.WeightMeasure("ab", [2**70, 2**71])
assert big.weight("ab") == 3 * 2**70

assert [wpn.count_binary_pn(n) for n in (1, 2, 3)] == [2, 3, 5]
passed, cases, replays = wpn.verify("prime-gapful")
assert passed and cases == 336 and replays == []

try:
    wpn.WeightMeasure("ab", [1, 0])
except ValueError:
    pass
else:
    raise AssertionError("zero weight accepted")

print("smoke test passed")
