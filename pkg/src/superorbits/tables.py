"""Static orbit tables for G(3), F(4) and GAMMA with computed k rows."""

from __future__ import annotations

import json

from .algebra import build_algebra, centralizer_dims, orbit_representative
from .families import F4_TABLE, G3_TABLE, GAMMA_TABLE, AlgebraSpec, Family, OrbitLabel
from .invariants import k_formula, k_oracle
from .partitions import enumerate_partitions

TABLE_NAMES = ("g3", "f4", "gamma")
GAMMA_TABLE_SIGMA = (1, 1, -2)


def _braces(triple) -> str:
    return "{" + ",".join(str(p) for p in triple) + "}"


def table_data(name: str) -> dict:
    """Header plus rows; each row is a name and one value per column."""
    nus = enumerate_partitions(2)
    if name == "g3":
        header = ["O = O_mu"] + [bc for bc, _, _ in G3_TABLE]
        rows = [
            ["mu"] + [str(mu) for _, mu, _ in G3_TABLE],
            ["dim O"] + [str(d) for _, _, d in G3_TABLE],
        ]
        for nu in nus:
            rows.append([f"k(O_mu,nu), nu = {nu}"] + [str(k_formula(OrbitLabel(Family.G3, mu, nu))) for _, mu, _ in G3_TABLE])
    elif name == "f4":
        header = ["eta"] + [str(eta) for eta, _, _ in F4_TABLE]
        rows = [
            ["mu = sigma(eta)"] + [str(mu) for _, mu, _ in F4_TABLE],
            ["dim O_mu"] + [str(d) for _, _, d in F4_TABLE],
        ]
        for nu in nus:
            rows.append([f"k(O_mu,nu), nu = {nu}"] + [str(k_formula(OrbitLabel(Family.F4, mu, nu))) for _, mu, _ in F4_TABLE])
    elif name == "gamma":
        spec = AlgebraSpec.gamma(*GAMMA_TABLE_SIGMA)
        header = ["{mu,upsilon,eta}"] + [_braces(t) for t, _, _ in GAMMA_TABLE]
        computed_k, computed_dim = [], []
        for triple, _, _ in GAMMA_TABLE:
            label = OrbitLabel(Family.GAMMA, triple=triple)
            computed_k.append(str(k_oracle(spec, label)))
            x = orbit_representative(spec, label)
            alg = build_algebra(spec)
            computed_dim.append(str(alg.dim_even - centralizer_dims(alg, x)[0]))
        sigma = ",".join(str(s) for s in GAMMA_TABLE_SIGMA)
        rows = [
            ["dim O"] + [str(d) for _, d, _ in GAMMA_TABLE],
            ["k(O)"] + [str(k) for _, _, k in GAMMA_TABLE],
            [f"dim O (computed, sigma = {sigma})"] + computed_dim,
            [f"k(O) (computed, sigma = {sigma})"] + computed_k,
        ]
    else:
        raise ValueError(f"unknown table {name!r}; choose from {', '.join(TABLE_NAMES)}")
    return {"table": name, "header": header, "rows": rows}


def render_table(name: str, fmt: str = "markdown") -> str:
    data = table_data(name)
    header, rows = data["header"], data["rows"]
    if fmt == "json":
        doc = {"table": name, "header": header, "rows": [{"name": r[0], "values": r[1:]} for r in rows]}
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        import csv
        import io

        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    if fmt == "markdown":
        lines = ["| " + " | ".join(header) + " |", "|" + "|".join(" --- " for _ in header) + "|"]
        lines += ["| " + " | ".join(r) + " |" for r in rows]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
