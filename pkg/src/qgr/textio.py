"""Text and JSON forms of algebra elements."""

from .coeff import LaurentPoly, Scalar, format_laurent

__all__ = [
    "format_dhom",
    "format_grass",
    "format_matalg",
    "format_scalar",
    "format_terms",
    "grass_from_json",
    "grass_to_json",
    "matalg_from_json",
    "matalg_to_json",
    "minor_text",
    "dhom_to_json",
    "dhom_from_json",
]


def format_scalar(c):
    return str(c)


def _coeff_prefix(c):
    """(negative, text) for a coefficient placed in front of a basis element."""
    if c.is_laurent():
        terms = c.num.terms
        if len(terms) == 1:
            (e, v), = terms.items()
            neg = v < 0
            a = LaurentPoly._wrap({e: -v if neg else v})
            return neg, ("" if a.is_one() else format_laurent(a))
        if c.num.leading_coeff() < 0:
            return True, f"({format_laurent(-c.num)})"
        return False, f"({format_laurent(c.num)})"
    if c.num.leading_coeff() < 0:
        return True, f"({format_laurent(-c.num)})/({format_laurent(c.den)})"
    return False, f"({format_laurent(c.num)})/({format_laurent(c.den)})"


def format_terms(items):
    """Join (basis_text, Scalar) pairs; an empty basis_text stands for 1."""
    parts = []
    for body, c in items:
        neg, pre = _coeff_prefix(c)
        if not body:
            text = pre or "1"
        elif pre:
            text = f"{pre}*{body}"
        else:
            text = body
        if not parts:
            parts.append(f"-{text}" if neg else text)
        else:
            parts.append(f"- {text}" if neg else f"+ {text}")
    return " ".join(parts) if parts else "0"


def format_matalg(a):
    amb = a.ambient
    items = []
    for codes in sorted(a.terms):
        from .qmatrix import PbwMonomial

        mono = PbwMonomial.from_codes(codes, amb)
        items.append(("" if not codes else str(mono), a.terms[codes]))
    return format_terms(items)


def minor_text(cols):
    return "[" + " ".join(str(j) for j in cols) + "]"


def format_grass(g):
    items = [("".join(minor_text(r) for r in t), g.terms[t]) for t in sorted(g.terms, reverse=True)]
    return format_terms(items)


def format_dhom(d):
    amb = d.ambient
    top = tuple(range(amb.n - amb.m + 1, amb.n + 1))
    items = []
    for (t, c) in sorted(d.terms, key=lambda k: (k[1] - len(k[0]), k[0], k[1]), reverse=True):
        if c == 1 and len(t) == 1:
            body = "{" + " ".join(str(j) for j in t[0]) + "}"
        else:
            body = "".join(minor_text(r) for r in t)
            if c:
                body = (body + "*" if body else "") + minor_text(top) + f"^{-c}"
        items.append((body, d.terms[(t, c)]))
    return format_terms(items)


# ---------------------------------------------------------------------------
# JSON


def _ambient_json(amb):
    out = {"ambient": [amb.m, amb.n]}
    if amb.qinv:
        out["qinv"] = True
    return out


def _ambient_from(data):
    from .qmatrix import Ambient

    m, n = data["ambient"]
    return Ambient(int(m), int(n), bool(data.get("qinv", False)))


def matalg_to_json(a):
    from .qmatrix import PbwMonomial

    out = _ambient_json(a.ambient)
    out["terms"] = [
        {"mono": [list(x) for x in PbwMonomial.from_codes(codes, a.ambient).exponents],
         "coeff": a.terms[codes].to_json()}
        for codes in sorted(a.terms)
    ]
    return out


def matalg_from_json(data):
    from .qmatrix import MatAlgElem, PbwMonomial

    amb = _ambient_from(data)
    terms = {}
    for t in data["terms"]:
        mono = PbwMonomial(tuple(tuple(int(v) for v in x) for x in t["mono"]))
        terms[mono.codes(amb)] = Scalar.from_json(t["coeff"])
    return MatAlgElem(amb, terms)


def grass_to_json(g):
    out = _ambient_json(g.ambient)
    out["terms"] = [
        {"tableau": [list(r) for r in t], "coeff": g.terms[t].to_json()}
        for t in sorted(g.terms, reverse=True)
    ]
    return out


def grass_from_json(data):
    from .grassmann import GrassElem

    amb = _ambient_from(data)
    return GrassElem(amb, {tuple(tuple(r) for r in t["tableau"]): Scalar.from_json(t["coeff"])
                           for t in data["terms"]})


def dhom_to_json(d):
    from .grassmann import GrassElem

    out = _ambient_json(d.ambient)
    powers = {}
    for (t, c), v in d.terms.items():
        powers.setdefault(c, {})[t] = v
    out["powers"] = [
        {"c": c, "numer": grass_to_json(GrassElem(d.ambient, powers[c]))}
        for c in sorted(powers)
    ]
    return out


def dhom_from_json(data):
    from .dehom import DhomElem

    amb = _ambient_from(data)
    terms = {}
    for p in data["powers"]:
        g = grass_from_json(p["numer"])
        for t, v in g.terms.items():
            terms[(t, int(p["c"]))] = v
    return DhomElem(amb, terms)
