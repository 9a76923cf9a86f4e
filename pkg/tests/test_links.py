import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pingmark import (
    BadTimestamp,
    GeoCoordinate,
    InvalidCoordinate,
    MalformedLink,
    OutOfRange,
    PingmarkLink,
    format_link,
    parse_link,
    parse_timestamp,
    to_geo_uri,
)
from pingmark.links import format_coordinate, format_geo_number

from oracles import CANONICAL_LINK_RE, check_geo_uri


class TestFormatLink:
    def test_origin_without_timestamp(self):
        assert format_link(PingmarkLink(GeoCoordinate(0, 0))) == (
            "https://pingmark.me/0.00000/0.00000"
        )

    def test_with_timestamp(self):
        link = PingmarkLink(
            GeoCoordinate(43.0757, 25.6172), parse_timestamp("20251101T120000Z")
        )
        rendered = format_link(link)
        assert rendered == "https://pingmark.me/43.07570/25.61720/20251101T120000Z"
        assert CANONICAL_LINK_RE.match(rendered)
        assert parse_link(rendered) == link

    def test_out_of_range_is_rejected_at_construction(self):
        with pytest.raises(InvalidCoordinate):
            PingmarkLink(GeoCoordinate(90.0001, 0))

    def test_five_fraction_digits_always(self):
        assert format_link(PingmarkLink(GeoCoordinate(90, -180))) == (
            "https://pingmark.me/90.00000/-180.00000"
        )

    def test_rounding_ties_away_from_zero(self):
        rendered = format_link(PingmarkLink(GeoCoordinate(0.000005, -0.000005)))
        assert rendered == "https://pingmark.me/0.00001/-0.00001"

    def test_negative_zero_never_rendered(self):
        rendered = format_link(PingmarkLink(GeoCoordinate(-0.000001, -0.0)))
        assert rendered == "https://pingmark.me/0.00000/0.00000"


class TestParseLink:
    def test_origin(self):
        link = parse_link("https://pingmark.me/0.00000/0.00000")
        assert link.coordinate == GeoCoordinate(0, 0)
        assert link.timestamp is None
        assert link.base_host == "pingmark.me"

    def test_with_timestamp(self):
        link = parse_link("https://pingmark.me/-33.85680/151.21530/20251101T033000Z")
        assert link.coordinate == GeoCoordinate(-33.8568, 151.2153)
        assert link.timestamp == parse_timestamp("2025-11-01T03:30:00Z")

    @pytest.mark.parametrize(
        "url",
        [
            "https://pingmark.me/abc/12",
            "https://pingmark.me/0.00000",
            "https://pingmark.me/0/0/0/0",
            "https://pingmark.me",
            "https://pingmark.me/",
            "http://pingmark.me/0.00000/0.00000",
            "ftp://pingmark.me/0/0",
            "https:///0.00000/0.00000",
            "https://pingmark.me/0.123456789/0",
            "https://pingmark.me/+43.0/0",
            "https://pingmark.me/43./25",
            "https://pingmark.me/.5/0",
            "https://pingmark.me/1e2/0",
            "https://pingmark.me/0.00000/0.00000?x=1",
            "https://pingmark.me/0.00000/0.00000#frag",
            "https://pingmark.me/ 0/0",
            "https://pingmark.me/٤٢/0",
            "",
        ],
    )
    def test_malformed(self, url):
        with pytest.raises(MalformedLink):
            parse_link(url)

    @pytest.mark.parametrize(
        "url",
        [
            "https://pingmark.me/91.0/0.0",
            "https://pingmark.me/-91/0",
            "https://pingmark.me/0/180.1",
            "https://pingmark.me/999/0",
            "https://pingmark.me/90.0000001/0",
            "https://pingmark.me/91/0/badts",
        ],
    )
    def test_out_of_range(self, url):
        with pytest.raises(OutOfRange):
            parse_link(url)

    @pytest.mark.parametrize(
        "url",
        [
            "https://pingmark.me/0/0/2025-11-01T12:00:00",
            "https://pingmark.me/0/0/20230229T000000Z",
            "https://pingmark.me/0/0/garbage",
            "https://pingmark.me/0/0//",
        ],
    )
    def test_bad_timestamp(self, url):
        with pytest.raises(BadTimestamp):
            parse_link(url)

    def test_integer_coordinates_accepted(self):
        link = parse_link("https://pingmark.me/43/25")
        assert link.coordinate == GeoCoordinate(43.0, 25.0)

    def test_seven_fraction_digits_accepted(self):
        link = parse_link("https://pingmark.me/43.0757001/25.6172999")
        assert link.coordinate.latitude == pytest.approx(43.0757001, abs=1e-9)

    def test_inclusive_boundaries(self):
        link = parse_link("https://pingmark.me/90.00000/180.00000")
        assert link.coordinate == GeoCoordinate(90, 180)
        link = parse_link("https://pingmark.me/-90/-180")
        assert link.coordinate == GeoCoordinate(-90, -180)

    def test_trailing_slash_tolerated(self):
        link = parse_link("https://pingmark.me/0.00000/0.00000/")
        assert link.coordinate == GeoCoordinate(0, 0)

    def test_path_only_uses_caller_base_host(self):
        link = parse_link("/1.00000/2.00000", base_host="maps.example.org")
        assert link.base_host == "maps.example.org"
        assert link.coordinate == GeoCoordinate(1, 2)

    def test_scheme_relative(self):
        link = parse_link("//pingmark.me/1.50000/2.50000")
        assert link.base_host == "pingmark.me"

    def test_scheme_is_case_insensitive(self):
        link = parse_link("HTTPS://pingmark.me/5.00000/6.00000")
        assert link.coordinate == GeoCoordinate(5, 6)

    def test_host_with_port_preserved(self):
        link = parse_link("https://localhost:8080/1.00000/2.00000")
        assert link.base_host == "localhost:8080"

    def test_negative_zero_normalized(self):
        link = parse_link("https://pingmark.me/-0.00000/0.00000")
        assert str(link.coordinate.latitude) == "0.0"

    def test_error_codes(self):
        for url, code in [
            ("https://pingmark.me/abc/12", "malformed"),
            ("https://pingmark.me/91/0", "out_of_range"),
            ("https://pingmark.me/0/0/x", "bad_timestamp"),
        ]:
            with pytest.raises(Exception) as excinfo:
                parse_link(url)
            assert excinfo.value.code == code


class TestGeoUri:
    def test_origin_minimal_rendering(self):
        assert to_geo_uri(PingmarkLink(GeoCoordinate(0, 0))) == "geo:0,0"

    def test_plain_coordinates(self):
        uri = to_geo_uri(PingmarkLink(GeoCoordinate(43.0757, 25.6172)))
        assert uri == "geo:43.0757,25.6172"
        assert check_geo_uri(uri) == (43.0757, 25.6172)

    def test_timestamp_dropped(self):
        link = PingmarkLink(
            GeoCoordinate(43.0757, 25.6172), parse_timestamp("20251101T120000Z")
        )
        assert to_geo_uri(link) == "geo:43.0757,25.6172"

    def test_trailing_zeros_trimmed(self):
        assert to_geo_uri(PingmarkLink(GeoCoordinate(1.5, -2.0))) == "geo:1.5,-2"

    def test_half_fraction_kept(self):
        assert format_geo_number(0.5) == "0.5"

    def test_seventh_digit_rounds_half_away(self):
        assert format_geo_number(0.1234565) == "0.123457"
        assert format_geo_number(-0.1234565) == "-0.123457"
        assert format_geo_number(0.0000005) == "0.000001"

    def test_rounding_to_zero_drops_sign(self):
        assert format_geo_number(-0.0000001) == "0"

    @settings(max_examples=300)
    @given(
        st.floats(min_value=-90, max_value=90, allow_nan=False),
        st.floats(min_value=-180, max_value=180, allow_nan=False),
    )
    def test_always_valid_rfc5870(self, lat, lon):
        uri = to_geo_uri(PingmarkLink(GeoCoordinate(lat, lon)))
        got_lat, got_lon = check_geo_uri(uri)
        assert got_lat == pytest.approx(lat, abs=5e-7)
        assert got_lon == pytest.approx(lon, abs=5e-7)


class TestRoundTrip:
    @settings(max_examples=500)
    @given(
        st.floats(min_value=-90, max_value=90, allow_nan=False),
        st.floats(min_value=-180, max_value=180, allow_nan=False),
        st.one_of(st.none(), st.integers(min_value=0, max_value=253402300799)),
    )
    def test_parse_inverts_format(self, lat, lon, epoch):
        from pingmark import PingTimestamp

        timestamp = None if epoch is None else PingTimestamp.from_epoch(epoch)
        link = PingmarkLink(GeoCoordinate(lat, lon), timestamp)
        rendered = format_link(link)
        assert CANONICAL_LINK_RE.match(rendered), rendered
        parsed = parse_link(rendered)
        assert abs(parsed.coordinate.latitude - lat) <= 5e-6
        assert abs(parsed.coordinate.longitude - lon) <= 5e-6
        assert parsed.timestamp == timestamp
        assert parsed.base_host == link.base_host

    def test_format_coordinate_is_fixed_width_fraction(self):
        assert format_coordinate(1.0) == "1.00000"
        assert format_coordinate(-179.999999) == "-180.00000"
        assert format_coordinate(0.123456) == "0.12346"
