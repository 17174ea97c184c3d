from z2z2u.reproduce import CHECKS, run_checks


def test_registry_covers_published_results():
    keys = [c.key for c in CHECKS]
    assert len(set(keys)) == len(keys)
    assert any("W_C-dual" in k for k in keys)
    assert sum(k.startswith("table row") for k in keys) == 4
    for needle in ("perfect", "Plotkin", "classification", "type formula", "one-weight theorems"):
        assert any(needle in k for k in keys), needle


def test_quick_checks_pass():
    failed = [(r.key, r.detail) for r in run_checks() if not r.ok]
    assert failed == []
