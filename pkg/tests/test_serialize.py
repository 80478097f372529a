import json

from hierasure import (
    BalancedFamily,
    BoundedFamily,
    FullFamily,
    PowerFamily,
    apply_erasure,
    balanced_code,
    gabidulin_code,
    kernel_basis,
    length2_code,
    serialize,
    vontobel_udms,
)
from towers import field, tower


def canon(payload):
    return json.dumps(payload, sort_keys=True)


class TestTower:
    def test_round_trip_bits(self):
        for p, e, alpha in ((2, 1, 2), (3, 1, 2), (2, 2, 2), (5, 1, 4)):
            ext = tower(p, e, alpha)
            payload = serialize.tower_to_json(ext)
            back = serialize.tower_from_json(json.loads(canon(payload)))
            assert back == ext
            assert canon(serialize.tower_to_json(back)) == canon(payload)


class TestElements:
    def test_nested_coefficient_arrays(self):
        ext = tower(2, 2, 2)
        el = ext.from_index(7)
        payload = serialize.element_to_json(el)
        assert serialize.ext_element_from_json(ext, payload) == el
        base_el = ext.base.from_index(3)
        assert (
            serialize.base_element_from_json(ext.base, serialize.element_to_json(base_el))
            == base_el
        )


class TestFamilies:
    def test_all_kinds(self):
        for fam in (
            FullFamily(2, 2, 3),
            BalancedFamily(4, 4),
            PowerFamily(4, 2),
            BoundedFamily(1, 3),
        ):
            assert serialize.family_from_json(serialize.family_to_json(fam)) == fam

    def test_pattern_lists(self):
        pats = [(0, 1), (2, 0), (1, 1)]
        assert serialize.patterns_from_json(serialize.patterns_to_json(pats)) == pats


class TestCodes:
    def codes(self):
        yield length2_code(tower(2, 1, 2))
        yield balanced_code(4, tower(5, 1, 4))
        yield gabidulin_code(3, 1, tower(2, 1, 3))

    def test_round_trip(self):
        for code in self.codes():
            payload = serialize.code_to_json(code)
            back = serialize.code_from_json(json.loads(canon(payload)))
            assert back.ext == code.ext
            assert back.H == code.H
            assert back.omega == code.omega
            assert back.claim == code.claim
            assert back.dim == code.dim
            assert canon(serialize.code_to_json(back)) == canon(payload)

    def test_zero_row_code_keeps_length(self):
        code = gabidulin_code(2, 0, tower(2, 1, 2))
        back = serialize.code_from_json(serialize.code_to_json(code))
        assert back.n == 2 and back.r == 0 and back.dim == 2


class TestUdms:
    def test_round_trip(self):
        u = vontobel_udms(3, 2, 3, field(3, 1))
        payload = serialize.udms_to_json(u)
        back = serialize.udms_from_json(json.loads(canon(payload)))
        assert back.field == u.field
        assert back.matrices == u.matrices
        assert back.meta == dict(u.meta)
        assert canon(serialize.udms_to_json(back)) == canon(payload)


class TestReceived:
    def test_round_trip(self):
        code = length2_code(tower(2, 1, 4))
        word = tuple(kernel_basis(code)[0])
        rw = apply_erasure(word, (3, 1), code.omega)
        payload = serialize.received_to_json(rw)
        back = serialize.received_from_json(json.loads(canon(payload)))
        assert back == rw
        assert canon(serialize.received_to_json(back)) == canon(payload)

    def test_codeword_payload(self):
        ext = tower(3, 1, 2)
        word = (ext.from_index(5), ext.from_index(2))
        payload = serialize.codeword_to_json(word)
        assert serialize.codeword_from_json(ext, payload) == word
