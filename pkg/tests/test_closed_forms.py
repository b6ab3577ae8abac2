import pytest

from app.core.exceptions import GraphError
from app.models.schemas import FamilySpec, GraphFamily
from app.services.closed_form_service import closed_form_service, fibonacci_lucas
from app.services.family_service import family_service
from app.services.sigma_service import sigma_service


def spec(text: str) -> FamilySpec:
    return FamilySpec.parse(text)


class TestSequences:
    @pytest.mark.parametrize("k, expected", [
        (0, (0, 2)),
        (1, (1, 1)),
        (2, (1, 3)),
        (3, (2, 4)),
        (10, (55, 123)),
        (50, (12586269025, 28143753123)),
    ])
    def test_fibonacci_lucas(self, k, expected):
        assert fibonacci_lucas(k) == expected

    def test_recurrences_hold(self):
        for k in range(2, 300):
            f, l = fibonacci_lucas(k)
            assert f == fibonacci_lucas(k - 1)[0] + fibonacci_lucas(k - 2)[0]
            assert l == fibonacci_lucas(k - 1)[1] + fibonacci_lucas(k - 2)[1]

    def test_negative_index(self):
        with pytest.raises(GraphError):
            fibonacci_lucas(-1)


class TestPaths:
    def test_sigma0_path(self):
        assert closed_form_service.sigma0_path(4) == 8
        assert closed_form_service.sigma0_path(1) == 2
        assert closed_form_service.sigma0_path(0) == 1
        assert closed_form_service.sigma0_path(-3) == 1

    def test_sigma1_path(self):
        assert closed_form_service.sigma1_path(4) == 5
        assert closed_form_service.sigma1_path(3) == 2
        assert closed_form_service.sigma1_path(1) == 0
        assert closed_form_service.sigma1_path(0) == 0

    def test_convolution_identity(self):
        for n in range(1, 41):
            assert closed_form_service.sigma1_path(n) == closed_form_service.sigma1_path_convolution(n)

    def test_division_by_five_is_exact(self):
        assert all(closed_form_service.path_division_is_exact(n) for n in range(1, 2001))

    def test_paths_match_recursion(self):
        for n in range(1, 41):
            path = family_service.path(n)
            assert closed_form_service.sigma0_path(n) == sigma_service.sigma0(path)
            assert closed_form_service.sigma1_path(n) == sigma_service.sigma1(path)


class TestFamilies:
    @pytest.mark.parametrize("text, expected", [
        ("complete:5", 10),
        ("cycle:5", 10),
        ("cycle:3", 3),
        ("unicyclic-star:6", 13),
        ("unicyclic-star:7", 22),
        ("wheel:4", 6),
        ("broom:4:2", 3),
        ("matching:3:0", 27),
        ("matching:4:0", 108),
        ("matching:3:2", 108),
        ("star:7", 6),
        ("complete-bipartite:2:3", 6),
        ("edgeless:5", 0),
    ])
    def test_sigma1_examples(self, text, expected):
        assert closed_form_service.sigma1_family(spec(text)) == expected

    @pytest.mark.parametrize("text, expected", [
        ("path:4", 8),
        ("cycle:5", 11),
        ("complete:4", 5),
        ("star:4", 9),
        ("complete-bipartite:2:3", 11),
        ("wheel:5", 8),
        ("unicyclic-star:5", 13),
        ("tadpole:4:2", 7),
        ("matching:2:1", 18),
        ("edgeless:3", 8),
    ])
    def test_sigma0_examples(self, text, expected):
        assert closed_form_service.sigma0_family(spec(text)) == expected

    def test_every_instance_matches_oracle(self):
        checked = 0
        for instance in family_service.instances(14):
            graph = family_service.construct(instance)
            assert closed_form_service.sigma1_family(instance) == sigma_service.sigma_k_brute(graph, 1), str(instance)
            assert closed_form_service.sigma0_family(instance) == sigma_service.sigma_k_brute(graph, 0), str(instance)
            checked += 1
        assert checked > 300

    def test_large_instances_match_recursion(self):
        for text in ["cycle:40", "wheel:30", "broom:40:17", "lollipop:30:12", "tadpole:40:15", "unicyclic-star:35"]:
            instance = spec(text)
            graph = family_service.construct(instance)
            assert closed_form_service.sigma1_family(instance) == sigma_service.sigma1(graph), text
            assert closed_form_service.sigma0_family(instance) == sigma_service.sigma0(graph), text

    def test_union_of_cycles(self):
        pairs = {(3, 4): 37, (4, 4): 56, (3, 5): 73, (4, 5): 114, (3, 6): 126, (4, 6): 198, (5, 5): 220}
        for (a, b), expected in pairs.items():
            specs = [FamilySpec.of(GraphFamily.CYCLE, a), FamilySpec.of(GraphFamily.CYCLE, b)]
            assert closed_form_service.sigma1_union_of_families(specs) == expected

    def test_complete_graph_is_not_extremal_from_seven(self):
        assert not closed_form_service.complete_graph_is_not_extremal(6)
        for n in range(7, 30):
            assert closed_form_service.complete_graph_is_not_extremal(n)

    def test_edgeless_has_its_own_forms(self):
        assert closed_form_service.sigma1_family(spec("edgeless:0")) == 0
        assert closed_form_service.sigma0_family(spec("edgeless:0")) == 1

    def test_unknown_family_is_rejected(self):
        unknown = FamilySpec.model_construct(family="hypercube", params=(3,))
        with pytest.raises(ValueError):
            closed_form_service.sigma1_family(unknown)
        with pytest.raises(ValueError):
            closed_form_service.sigma0_family(unknown)
