import itertools

from mforge import CorpusCaps, are_isomorphic, corpus_generate, descriptor


def test_same_seed_same_corpus():
    a = [descriptor(nm) for nm in corpus_generate(7)]
    b = [descriptor(nm) for nm in corpus_generate(7)]
    assert a == b


def test_names_unique():
    names = [nm.name for nm in corpus_generate(0)]
    assert len(names) == len(set(names))


def test_caps_respected():
    caps = CorpusCaps(max_ground=16, max_rank=4)
    for nm in corpus_generate(0, caps):
        assert nm.matroid.n <= 16
        assert nm.matroid.full_rank <= 4


def test_contains_required_families():
    names = {nm.name for nm in corpus_generate(0)}
    for needed in (
        "PG(2,2)",
        "PG(2,5)",
        "AG(2,3)",
        "U(2,4)",
        "Spike(4)",
        "Swirl(5)",
        "TwoSumChain(3)",
        "Lcirc(2,3)",
        "Llambda(3,2)",
        "P(2,2,2)",
        "Dual(PG(2,2))",
    ):
        assert needed in names, needed


def test_has_nonsimple_and_dual_members():
    corp = corpus_generate(0)
    nonsimple = [nm for nm in corp if nm.matroid.epsilon() < nm.matroid.n]
    assert len(nonsimple) >= 2
    duals = [nm for nm in corp if nm.name.startswith("Dual(")]
    assert len(duals) == 2


def test_small_members_pairwise_nonisomorphic():
    small = [nm for nm in corpus_generate(0) if nm.matroid.n <= 9]
    assert len(small) >= 20
    for a, b in itertools.combinations(small, 2):
        if a.matroid.n != b.matroid.n:
            continue
        cert = are_isomorphic(a.matroid, b.matroid)
        assert cert is None, f"{a.name} and {b.name} coincide"


def test_seed_changes_only_sampled_members():
    fixed0 = [nm.name for nm in corpus_generate(0) if "s0" not in nm.name]
    fixed1 = [nm.name for nm in corpus_generate(1) if "s1" not in nm.name]
    assert fixed0 == fixed1
