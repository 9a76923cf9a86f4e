from hypothesis import given, settings
from hypothesis import strategies as st

from pingmark import (
    GeoCoordinate,
    PingmarkLink,
    expand,
    format_link,
    parse_timestamp,
    scan,
)

from test_scanner import fuzz_text

ORIGIN = GeoCoordinate(0, 0)
SOUTH_ENTRANCE = "We're waiting at the south entrance !@."


class TestExpandExamples:
    def test_south_entrance_at_origin(self):
        result = expand(SOUTH_ENTRANCE, ORIGIN)
        assert result.text == (
            "We're waiting at the south entrance "
            "https://pingmark.me/0.00000/0.00000."
        )
        assert len(result.links) == 1
        assert result.links[0].coordinate == ORIGIN
        assert result.links[0].timestamp is None

    def test_no_trigger_returns_text_unchanged(self):
        result = expand("no trigger here", GeoCoordinate(43.0757, 25.6172))
        assert result.text == "no trigger here"
        assert result.links == ()

    def test_escaped_trigger_left_verbatim(self):
        result = expand("a \\!@ b", ORIGIN)
        assert result.text == "a \\!@ b"
        assert result.links == ()

    def test_all_triggers_share_one_fix(self):
        ts = parse_timestamp("20251101T120000Z")
        result = expand("!@ and !@", GeoCoordinate(43.0757, 25.6172), ts)
        url = "https://pingmark.me/43.07570/25.61720/20251101T120000Z"
        assert result.text == f"{url} and {url}"
        assert len(result.links) == 2
        assert result.links[0] == result.links[1]

    def test_custom_base_host(self):
        result = expand("!@", ORIGIN, base_host="maps.example.org")
        assert result.text == "https://maps.example.org/0.00000/0.00000"


coordinates = st.builds(
    GeoCoordinate,
    st.floats(min_value=-90, max_value=90, allow_nan=False),
    st.floats(min_value=-180, max_value=180, allow_nan=False),
)


class TestExpandProperties:
    @settings(max_examples=300)
    @given(fuzz_text, coordinates)
    def test_text_outside_spans_is_preserved(self, text, coordinate):
        result = expand(text, coordinate)
        # rebuild the expected output from the original text and the scan
        url = format_link(PingmarkLink(coordinate))
        data = text.encode("utf-8", "surrogatepass")
        rebuilt = bytearray()
        cursor = 0
        for span in scan(text):
            if span.escaped:
                continue
            rebuilt += data[cursor:span.start]
            rebuilt += url.encode()
            cursor = span.end
        rebuilt += data[cursor:]
        assert result.text == rebuilt.decode("utf-8", "surrogatepass")

    @settings(max_examples=300)
    @given(fuzz_text, coordinates)
    def test_idempotent(self, text, coordinate):
        once = expand(text, coordinate)
        twice = expand(once.text, coordinate)
        assert twice.text == once.text
        assert twice.links == ()

    @settings(max_examples=200)
    @given(fuzz_text, coordinates)
    def test_escaped_spans_survive(self, text, coordinate):
        escaped_before = sum(1 for s in scan(text) if s.escaped)
        after = expand(text, coordinate).text
        escaped_after = sum(1 for s in scan(after) if s.escaped)
        assert escaped_after == escaped_before

    @settings(max_examples=200)
    @given(fuzz_text, coordinates)
    def test_one_link_per_unescaped_span(self, text, coordinate):
        unescaped = sum(1 for s in scan(text) if not s.escaped)
        assert len(expand(text, coordinate).links) == unescaped
