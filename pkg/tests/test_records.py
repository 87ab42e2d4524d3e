import io
import json

import pytest
from hypothesis import given, strategies as st

from impactplot.errors import ParseError, SchemaError
from impactplot.records import (
    COMPUTE,
    PRECOMPUTED,
    PublicationRecord,
    RecordSet,
    dump_publications,
    dump_reference_corpus,
    parse_publications,
    parse_reference_corpus,
)

HEADER = "id,year,citations,categories,journal_ranks,paper_percentile,journal_percentile\n"


def csv_bytes(*rows):
    return (HEADER + "".join(r + "\n" for r in rows)).encode()


def test_precomputed_row_passes_through():
    rs = parse_publications(csv_bytes('p1,2010,,"",,"95.0","80.0"'))
    assert rs.mode == PRECOMPUTED
    rec = rs[0]
    assert (rec.paper_percentile, rec.journal_percentile) == (95.0, 80.0)


def test_compute_row():
    rs = parse_publications(csv_bytes('p1,2010,14,"CHEM;PHYS","CHEM:12/150;PHYS:3/80",,'))
    assert rs.mode == COMPUTE
    rec = rs[0]
    assert rec.citations == 14
    assert rec.categories == ("CHEM", "PHYS")
    assert rec.journal_ranks == {"CHEM": (12, 150), "PHYS": (3, 80)}


def test_neither_mode_is_rejected_with_id_and_field():
    with pytest.raises(SchemaError) as err:
        parse_publications(csv_bytes('p1,2010,14,"CHEM;PHYS",,,'))
    assert err.value.record_id == "p1"
    assert err.value.field == "journal_ranks"


def test_mixed_modes_rejected():
    data = csv_bytes("p1,2010,,,,95.0,80.0", "p2,2011,3,CHEM,CHEM:1/10,,")
    with pytest.raises(SchemaError) as err:
        parse_publications(data)
    assert err.value.record_id == "p2"
    assert "mixed" in str(err.value)


def test_only_one_percentile_rejected():
    with pytest.raises(SchemaError) as err:
        parse_publications(csv_bytes("p1,2010,,,,95.0,"))
    assert err.value.field == "journal_percentile"


@pytest.mark.parametrize(
    "row, field",
    [
        ("p1,2010,3,CHEM,CHEM:11/10,,", "journal_ranks"),
        ("p1,2010,3,CHEM,CHEM:0/10,,", "journal_ranks"),
        ("p1,2010,3,CHEM,CHEM-1/10,,", "journal_ranks"),
        ("p1,2010,,,,100.5,50", "paper_percentile"),
        ("p1,2010,,,,50,-1", "journal_percentile"),
        ("p1,2010,,,,abc,50", "paper_percentile"),
        ("p1,1499,,,,50,50", "year"),
        ("p1,,,,,50,50", "year"),
        ("p1,2010,-2,CHEM,CHEM:1/10,,", "citations"),
        ("p1,2010,2.5,CHEM,CHEM:1/10,,", "citations"),
        (",2010,,,,50,50", "id"),
    ],
)
def test_schema_violations_name_the_field(row, field):
    with pytest.raises(SchemaError) as err:
        parse_publications(csv_bytes(row))
    assert err.value.field == field


def test_duplicate_ids_rejected():
    with pytest.raises(SchemaError) as err:
        parse_publications(csv_bytes("p1,2010,,,,50,50", "p1,2011,,,,60,60"))
    assert (err.value.record_id, err.value.field) == ("p1", "id")


def test_empty_set_rejected():
    with pytest.raises(SchemaError):
        parse_publications(HEADER.encode())


def test_header_required():
    with pytest.raises(ParseError) as err:
        parse_publications(b"p1,2010,,,,50,50\n")
    assert err.value.line == 1


def test_wrong_field_count_reports_line():
    with pytest.raises(ParseError) as err:
        parse_publications(csv_bytes("p1,2010,,,,50,50", "p2,2010,,,,50,50,extra"))
    assert err.value.line == 3


def test_unterminated_quote_is_a_parse_error():
    with pytest.raises(ParseError):
        parse_publications(csv_bytes('p1,2010,,"CHEM,,50,50'))


def test_header_order_is_free_and_crlf_and_bom_accepted():
    text = "\ufeffjournal_percentile,paper_percentile,id,year,citations,categories,journal_ranks\r\n80,95,p1,2010,,,\r\n"
    rs = parse_publications(text.encode("utf-8"))
    assert rs[0].paper_percentile == 95.0


def test_accepts_text_and_file_objects():
    data = csv_bytes("p1,2010,,,,50,50")
    assert parse_publications(io.BytesIO(data)) == parse_publications(data.decode())


def test_order_preserved():
    rows = [f"p{i},{2000 + i},,,,{i},{i}" for i in range(9, 0, -1)]
    rs = parse_publications(csv_bytes(*rows))
    assert [r.id for r in rs] == [f"p{i}" for i in range(9, 0, -1)]


def test_json_form():
    data = [
        {"id": "a", "year": 2010, "citations": 4, "categories": ["X", "Y"],
         "journal_ranks": {"X": [2, 20], "Y": "5/10"}},
        {"id": "b", "year": 2011, "citations": 0, "categories": "X",
         "journal_ranks": "X:1/20"},
    ]
    rs = parse_publications(json.dumps(data).encode(), "json")
    assert rs.mode == COMPUTE
    assert rs[0].journal_ranks == {"X": (2, 20), "Y": (5, 10)}
    assert rs[1].categories == ("X",)


def test_json_syntax_error_has_position():
    with pytest.raises(ParseError) as err:
        parse_publications(b'[{"id": "a",\n "year": }]', "json")
    assert err.value.line == 2


def test_json_unknown_field_rejected():
    with pytest.raises(SchemaError) as err:
        parse_publications(b'[{"id": "a", "year": 2010, "paper_percentile": 1, "journal_percentile": 2, "oops": 1}]', "json")
    assert err.value.field == "oops"


def test_csv_and_json_dumps_round_trip(r1):
    for fmt in ("csv", "json"):
        text = dump_publications(r1.records, fmt)
        assert parse_publications(text.encode(), fmt) == r1.records


# ---------------------------------------------------------------- corpus


def test_corpus_cell():
    cells = parse_reference_corpus(b"category,year,citations\nCHEM,2010,0\nCHEM,2010,3\nCHEM,2010,7\n")
    assert list(cells) == [("CHEM", 2010)]
    assert cells["CHEM", 2010].citation_counts == (0, 3, 7)


def test_corpus_rows_merge():
    cells = parse_reference_corpus(b"category,year,citations\nCHEM,2010,2\nPHYS,2010,5\nCHEM,2010,1\n")
    assert cells["CHEM", 2010].citation_counts == (1, 2)
    assert len(cells) == 2


def test_corpus_json_lists_merge():
    data = b'[{"category": "CHEM", "year": 2010, "citations": [0, 3]}, {"category": "CHEM", "year": 2010, "citations": 7}]'
    cells = parse_reference_corpus(data, "json")
    assert cells["CHEM", 2010].citation_counts == (0, 3, 7)


def test_corpus_negative_count_rejected():
    with pytest.raises(SchemaError) as err:
        parse_reference_corpus(b"category,year,citations\nCHEM,2010,-1\n")
    assert err.value.field == "citations"


def test_corpus_empty_rejected():
    with pytest.raises(SchemaError):
        parse_reference_corpus(b"category,year,citations\n")


def test_corpus_dump_round_trip(r1):
    for fmt in ("csv", "json"):
        assert parse_reference_corpus(dump_reference_corpus(r1.corpus, fmt).encode(), fmt) == r1.corpus


# ---------------------------------------------------------------- properties

codes = st.text(alphabet="ABCDEFGHIJKLMNOPQRSTUVWXYZ", min_size=1, max_size=5)
percentiles = st.floats(min_value=0, max_value=100, allow_nan=False)


@st.composite
def record_sets(draw):
    n = draw(st.integers(1, 8))
    precomputed = draw(st.booleans())
    recs = []
    for i in range(n):
        year = draw(st.integers(1500, 2200))
        if precomputed:
            recs.append(PublicationRecord(f"id{i}", year, paper_percentile=draw(percentiles),
                                          journal_percentile=draw(percentiles)))
        else:
            cats = tuple(dict.fromkeys(draw(st.lists(codes, min_size=1, max_size=3))))
            ranks = {}
            for c in cats:
                k = draw(st.integers(1, 500))
                ranks[c] = (draw(st.integers(1, k)), k)
            recs.append(PublicationRecord(f"id{i}", year, citations=draw(st.integers(0, 10_000)),
                                          categories=cats, journal_ranks=ranks))
    return RecordSet(tuple(recs))


@given(record_sets())
def test_json_round_trip_property(rs):
    once = parse_publications(dump_publications(rs, "json").encode(), "json")
    assert once == rs
    assert parse_publications(dump_publications(once, "json").encode(), "json") == rs


@given(record_sets())
def test_csv_round_trip_property(rs):
    assert parse_publications(dump_publications(rs, "csv").encode(), "csv") == rs
