"""Independent oracles used by the test-suite.

Nothing here touches the truncated-series engine.  Longitudes are built as
explicit free-group words by Milnor's substitution and their Magnus
coefficients are read off with a dynamic programme over the letters.
"""

from __future__ import annotations

from stringlink.diagram import StringLinkDiagram


def signed_crossing_lk(d: StringLinkDiagram) -> list[list[int]]:
    """Linking numbers straight from the event list, using an independent
    tracing of components and orientations."""
    n = d.strands
    widths = [n]
    for ev in d.events:
        name = type(ev).__name__
        widths.append(widths[-1] + (2 if name == "Cup" else -2 if name == "Cap" else 0))

    # union-find on segments (level, pos) plus orientation by walking
    label: dict[tuple[int, int], int] = {}
    orient: dict[tuple[int, int], int] = {}
    for start in range(1, n + 1):
        level, pos, up = 0, start, True
        while True:
            label[(level, pos)] = start
            orient[(level, pos)] = 1 if up else -1
            if up:
                if level == len(d.events):
                    break
                ev = d.events[level]
                name = type(ev).__name__
                if name == "Cross":
                    pos = {ev.pos: ev.pos + 1, ev.pos + 1: ev.pos}.get(pos, pos)
                    level += 1
                elif name == "Cup":
                    pos = pos if pos < ev.pos else pos + 2
                    level += 1
                elif pos in (ev.pos, ev.pos + 1):
                    pos, up = (ev.pos + 1 if pos == ev.pos else ev.pos), False
                else:
                    pos = pos if pos < ev.pos else pos - 2
                    level += 1
            else:
                ev = d.events[level - 1]
                name = type(ev).__name__
                if name == "Cross":
                    pos = {ev.pos: ev.pos + 1, ev.pos + 1: ev.pos}.get(pos, pos)
                    level -= 1
                elif name == "Cap":
                    pos = pos if pos < ev.pos else pos + 2
                    level -= 1
                elif pos in (ev.pos, ev.pos + 1):
                    pos, up = (ev.pos + 1 if pos == ev.pos else ev.pos), True
                else:
                    pos = pos if pos < ev.pos else pos - 2
                    level -= 1
    total = [[0] * n for _ in range(n)]
    for k, ev in enumerate(d.events):
        if type(ev).__name__ != "Cross":
            continue
        a, b = (k, ev.pos), (k, ev.pos + 1)
        if label[a] == label[b]:
            continue
        sign = ev.sign * orient[a] * orient[b]
        total[label[a] - 1][label[b] - 1] += sign
        total[label[b] - 1][label[a] - 1] += sign
    assert all(v % 2 == 0 for row in total for v in row)
    return [[v // 2 for v in row] for row in total]


def _reduce(word):
    out = []
    for letter in word:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return out


def _inv(word):
    return [(g, -e) for g, e in reversed(word)]


def longitude_words(d: StringLinkDiagram, depth: int):
    """Explicit corrected longitude words after ``depth`` substitution rounds."""
    from stringlink.wirtinger import presentation_from_diagram

    p = presentation_from_diagram(d)
    words = [[(c, 1)] for c in p.arc_component]
    for _ in range(depth):
        new = list(words)
        for r in p.relations:
            over = words[r.over_arc]
            left, right = (_inv(over), over) if r.sign > 0 else (over, _inv(over))
            new[r.out_arc] = _reduce(left + new[r.in_arc] + right)
        words = new
    out = []
    for j, trav in enumerate(p.longitude_traversal, start=1):
        w = []
        for arc, s in trav:
            w += words[arc] if s > 0 else _inv(words[arc])
        f = p.framing_exponent[j - 1]
        w += [(j, -1 if f > 0 else 1)] * abs(f)
        out.append(_reduce(w))
    return out


def magnus_coefficient(word, index) -> int:
    """Coefficient of X_{i_1}...X_{i_k} in the Magnus expansion of ``word``.

    ``x^+1`` contributes 1 or X; ``x^-1`` contributes (-X)^m for any m.
    """
    k = len(index)
    dp = [0] * (k + 1)
    dp[0] = 1
    for g, e in word:
        new = list(dp)   # the letter contributes its constant term
        for t in range(k):
            if not dp[t]:
                continue
            if e > 0:
                if index[t] == g:
                    new[t + 1] += dp[t]
            else:
                m = 0
                while t + m < k and index[t + m] == g:
                    m += 1
                    new[t + m] += dp[t] * (-1) ** m
        dp = new
    return dp[k]


def oracle_mu(d: StringLinkDiagram, index) -> int:
    words = longitude_words(d, len(index))
    return magnus_coefficient(words[index[-1] - 1], tuple(index[:-1]))
