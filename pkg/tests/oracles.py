"""Independent brute-force reference implementations used as test oracles.

Everything here works on plain tuples and dicts, re-deriving each
predicate directly from its definition by exhaustive enumeration. No
code from the package under test is imported, so agreement between the
two sides is meaningful evidence.
"""

from __future__ import annotations

from itertools import combinations, product


# -- adjacency ----------------------------------------------------------------


def raw_adjacent(x, y, u):
    """c_u adjacency from the definition: count coordinate differences."""
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    if x == y:
        return False
    diffs = [abs(a - b) for a, b in zip(x, y)]
    if any(d > 1 for d in diffs):
        return False
    return sum(diffs) <= u


def raw_adjacent_or_equal(x, y, u):
    return x == y or raw_adjacent(x, y, u)


def raw_neighbors(x, u):
    out = set()
    for offset in product((-1, 0, 1), repeat=len(x)):
        y = tuple(a + d for a, d in zip(x, offset))
        if raw_adjacent(x, y, u):
            out.add(y)
    return out


# -- connectivity -------------------------------------------------------------


def raw_components(points, u):
    points = sorted(points)
    remaining = set(points)
    parts = []
    while remaining:
        seed = min(remaining)
        part = {seed}
        frontier = [seed]
        while frontier:
            a = frontier.pop()
            for b in list(remaining):
                if b not in part and raw_adjacent(a, b, u):
                    part.add(b)
                    frontier.append(b)
        parts.append(tuple(sorted(part)))
        remaining -= part
    return sorted(parts)


def raw_connected(points, u):
    return len(raw_components(points, u)) <= 1


# -- continuity ---------------------------------------------------------------


def raw_continuous(table, u_dom, u_cod):
    """Pointwise form over all domain pairs."""
    for x, y in combinations(sorted(table), 2):
        if raw_adjacent(x, y, u_dom):
            if not raw_adjacent_or_equal(table[x], table[y], u_cod):
                return False
    return True


def raw_continuous_setwise(table, u_dom, u_cod):
    """Subset form: every connected subset has a connected image."""
    points = sorted(table)
    for size in range(1, len(points) + 1):
        for subset in combinations(points, size):
            if raw_connected(subset, u_dom):
                if not raw_connected({table[x] for x in subset}, u_cod):
                    return False
    return True


def enumerate_continuous_tables(dom_points, cod_points, u_dom, u_cod):
    """All continuous maps as dicts, by filtering the full product."""
    dom_points = sorted(dom_points)
    out = []
    for values in product(sorted(cod_points), repeat=len(dom_points)):
        table = dict(zip(dom_points, values))
        if raw_continuous(table, u_dom, u_cod):
            out.append(table)
    return out


def enumerate_continuous_tables_pruned(dom_points, cod_points, u_dom, u_cod):
    """Backtracking variant for spaces too big for the full product."""
    dom_points = sorted(dom_points)
    cod_points = sorted(cod_points)
    n = len(dom_points)
    out = []
    assignment = {}

    def extend(k):
        if k == n:
            out.append(dict(assignment))
            return
        x = dom_points[k]
        for v in cod_points:
            ok = True
            for y in dom_points[:k]:
                if raw_adjacent(x, y, u_dom) and not raw_adjacent_or_equal(
                    v, assignment[y], u_cod
                ):
                    ok = False
                    break
            if ok:
                assignment[x] = v
                extend(k + 1)
        assignment.pop(x, None)

    extend(0)
    return out


# -- homotopy -----------------------------------------------------------------


def raw_homotopy_ok(step_tables, f_table, g_table, u_dom, u_cod):
    """Literal check of the three homotopy conditions by full enumeration."""
    points = sorted(f_table)
    m = len(step_tables) - 1
    for x in points:
        if step_tables[0][x] != f_table[x] or step_tables[m][x] != g_table[x]:
            return False
    for x in points:
        for t in range(m):
            if not raw_adjacent_or_equal(
                step_tables[t][x], step_tables[t + 1][x], u_cod
            ):
                return False
    for table in step_tables:
        if not raw_continuous(table, u_dom, u_cod):
            return False
    return True


def raw_step_related(table_a, table_b, u_cod):
    """One homotopy step apart: pointwise adjacent-or-equal values."""
    return all(
        raw_adjacent_or_equal(table_a[x], table_b[x], u_cod) for x in table_a
    )


def raw_reachable_tables(all_tables, start_table, u):
    """Reachability over self-map tables by pairwise step filtering."""
    frozen = [tuple(sorted(t.items())) for t in all_tables]
    start = tuple(sorted(start_table.items()))
    assert start in frozen
    seen = {start}
    frontier = [start]
    while frontier:
        current = dict(frontier.pop())
        for candidate, table in zip(frozen, all_tables):
            if candidate not in seen and raw_step_related(current, table, u):
                seen.add(candidate)
                frontier.append(candidate)
    return seen


def raw_map_distance(all_tables, u, start_table, targets):
    """Shortest step count from start to any target table, or None."""
    frozen = [tuple(sorted(t.items())) for t in all_tables]
    target_set = {tuple(sorted(t.items())) for t in targets}
    start = tuple(sorted(start_table.items()))
    dist = {start: 0}
    queue = [start]
    while queue:
        current = queue.pop(0)
        if current in target_set:
            return dist[current]
        cur_table = dict(current)
        for candidate, table in zip(frozen, all_tables):
            if candidate not in dist and raw_step_related(cur_table, table, u):
                dist[candidate] = dist[current] + 1
                queue.append(candidate)
    return None


# -- randomized generators ----------------------------------------------------


def random_points(rng, dim, max_points, span=4):
    count = rng.randint(1, max_points)
    box = list(product(range(span), repeat=dim))
    return sorted(rng.sample(box, min(count, len(box))))


def random_table(rng, dom_points, cod_points):
    return {x: rng.choice(sorted(cod_points)) for x in dom_points}
