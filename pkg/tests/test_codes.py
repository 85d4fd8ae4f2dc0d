import pytest
from hypothesis import given
from hypothesis import strategies as st

from taksir.codes import (
    HAMZA,
    SurfaceRoot,
    apply_root_code,
    extract_root,
    parse_code,
    parse_root_code,
    parse_sg_code,
)
from taksir.errors import (
    AmbiguousPatternMatch,
    ArityMismatch,
    MalformedCode,
    NotFullyDiacritized,
    UnknownBpLabel,
)


def radicals(root):
    return "".join("h" if r == HAMZA else r for r in root.radicals)


class TestParseCode:
    def test_basic_entry_code(self):
        code = parse_code("$N3ap-f-FvEvL-FuEaL-123")
        assert code.class_tag == "N3ap"
        assert code.gender_flag == "f"
        assert code.sg_code.text == "FvEvL"
        assert code.bp_label == "FuEaL"
        assert code.root_code.text == "123"
        assert not code.human

    def test_gender_inflecting(self):
        assert parse_code("$N300-g-FvvEvL-FuEEaL-123").gender_flag == "g"

    def test_missing_components(self):
        with pytest.raises(MalformedCode):
            parse_code("$N3ap-f-FvEvL")

    def test_human_flag(self):
        code = parse_code("N300-m-FvEvL-FiEaaL-123+Hum")
        assert code.human
        assert code.text.endswith("+Hum")

    def test_case_noise_normalized(self):
        assert parse_sg_code("FvEvVl").text == "FvEvvL"
        assert parse_sg_code("FvEvLvVb").text == "FvEvLvvB"
        assert parse_sg_code("FvEEVl").text == "FvEEvL"
        assert parse_sg_code("FvEvLvBvvdvvd").text == "FvEvLvBvvDvvJ"

    def test_label_respelling(self):
        assert parse_code("$N3ap-f-FvEvvL-FaEaLiB-12h3").bp_label == "FaEaaLiB"

    def test_unknown_label(self):
        with pytest.raises(UnknownBpLabel):
            parse_code("$N3ap-f-FvEvL-FuEaaaL-123")

    def test_tag_arity_must_match(self):
        with pytest.raises(ArityMismatch):
            parse_code("$N3ap-f-FvEvLvB-FuEaL-123")

    def test_copy_index_beyond_singular(self):
        with pytest.raises(ArityMismatch):
            parse_code("$N3ap-f-FvEvL-FuEaL-124")

    def test_bad_root_code_digit(self):
        with pytest.raises(MalformedCode):
            parse_root_code("129")

    def test_gemination_mark_only_last(self):
        with pytest.raises(MalformedCode):
            parse_root_code("12G3")


class TestExtractRoot:
    def test_plain_trilateral(self):
        root = extract_root("Euqodap", parse_sg_code("FvEvL"), "N3ap")
        assert radicals(root) == "Eqd"
        assert root.positions == (1, 3, 5)

    def test_geminate_fills_two_slots(self):
        root = extract_root("MidGap", parse_sg_code("FvEvL"), "N3ap")
        assert radicals(root) == "Mdd"
        assert root.geminate_flags == (False, True, True)

    def test_pattern_owned_gemination(self):
        root = extract_root("sulGam", parse_sg_code("FvEEvL"), "N300")
        assert radicals(root) == "slm"
        assert root.geminate_flags == (False, True, False)

    def test_long_vowel_discarded_to_pattern(self):
        assert radicals(extract_root("SaAoHib", parse_sg_code("FvEvL"), "N300")) == "SHb"

    def test_no_discard_when_counts_match(self):
        assert radicals(extract_root("Miyomap", parse_sg_code("FvEvL"), "N3ap")) == "Mym"

    def test_quadrilateral(self):
        assert radicals(extract_root("diroham", parse_sg_code("FvEvLvB"), "N400")) == "drhm"

    def test_ambiguous_discard_rejected(self):
        with pytest.raises(AmbiguousPatternMatch):
            extract_root("SaAoruwox", parse_sg_code("FvEvLvB"), "N400")

    def test_explicit_vv_resolves_ambiguity(self):
        assert radicals(extract_root("SaAoruwox", parse_sg_code("FvvEvvL"), "N300")) == "Srx"

    def test_missing_diacritics(self):
        with pytest.raises(NotFullyDiacritized):
            extract_root("Eqdap", parse_sg_code("FvEvL"), "N3ap")

    def test_suffix_required_by_tag(self):
        with pytest.raises(ArityMismatch):
            extract_root("Euqod", parse_sg_code("FvEvL"), "N3ap")

    def test_stem_final_geminate_single_slot(self):
        root = extract_root("lutunGap", parse_sg_code("FvEvL"), "N3ap")
        assert radicals(root) == "ltn"

    def test_madda_expands_to_hamza_and_long_a(self):
        root = extract_root("Cxir", parse_sg_code("FvvEvL"), "N300")
        assert radicals(root) == "hxr"

    def test_hamza_letters_become_abstract(self):
        assert radicals(extract_root("tahonieap", parse_sg_code("FvEvLvB"), "N4ap")) == "thnh"

    def test_all_seed_entries_extract(self, seed):
        for entry in seed:
            root = extract_root(entry.lemma, entry.code.sg_code, entry.code.class_tag)
            assert len(root) == entry.code.sg_code.arity, entry.lemma

    def test_odd_position_convention(self, seed):
        # Radicals sit at odd (expanded) positions except right after a geminate.
        for entry in seed:
            root = extract_root(entry.lemma, entry.code.sg_code, entry.code.class_tag)
            prev_gem = False
            for pos, gem in zip(root.positions, root.geminate_flags):
                assert pos % 2 == 1 or prev_gem, (entry.lemma, root.positions)
                prev_gem = gem


class TestApplyRootCode:
    def test_identity(self):
        root = SurfaceRoot(("E", "q", "d"))
        assert apply_root_code(root, parse_root_code("123")).radicals == ("E", "q", "d")

    def test_final_substitution(self):
        root = SurfaceRoot(("q", "b", "w"))
        assert apply_root_code(root, parse_root_code("12y")).radicals == ("q", "b", "y")

    def test_medial_substitution(self):
        root = SurfaceRoot(("b", "A", "b"))
        assert apply_root_code(root, parse_root_code("1w3")).radicals == ("b", "w", "b")

    def test_hamza_insertion(self):
        root = SurfaceRoot(("M", "d", "d"))
        out = apply_root_code(root, parse_root_code("12h2"))
        assert radicals(out) == "Mdhd"

    def test_reduplication(self):
        root = SurfaceRoot(("s", "l", "m"))
        assert apply_root_code(root, parse_root_code("1223")).radicals == ("s", "l", "l", "m")

    def test_consonant_deletion(self):
        root = SurfaceRoot(("f", "y", "l", "s", "f"))
        assert apply_root_code(root, parse_root_code("1345")).radicals == ("f", "l", "s", "f")

    def test_six_consonant_reduction(self):
        root = SurfaceRoot((HAMZA, "m", "b", "r", "T", "r"))
        assert radicals(apply_root_code(root, parse_root_code("h356"))) == "hbTr"

    def test_geminate_final_flag(self):
        root = SurfaceRoot(("l", "t", "n"))
        out = apply_root_code(root, parse_root_code("123G"))
        assert out.radicals == ("l", "t", "n")
        assert out.geminate_flags == (False, False, True)

    @given(st.lists(st.sampled_from("bjdEqkMstT"), min_size=2, max_size=6))
    def test_identity_code_is_fixed_point(self, letters):
        root = SurfaceRoot(tuple(letters))
        identity = parse_root_code("".join(str(i + 1) for i in range(len(letters))))
        assert apply_root_code(root, identity).radicals == root.radicals
