"""Text and JSON rendering of monomials and elements."""

from .roots import E_NAMES, F_NAMES, T_NAMES

LETTERS = E_NAMES + T_NAMES + F_NAMES


def render_monomial(m):
    parts = []
    for name, n in zip(LETTERS, m):
        if n == 1:
            parts.append(name)
        elif n:
            parts.append(f"{name}^{n}")
    return " ".join(parts)


def _single_term(text):
    """True if no top-level sum occurs, so the text can stand as a factor."""
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and ch in "+-" and i > 0 and text[i - 1] == " ":
            return False
    return True


def render_term(c, m, first, mono=None):
    """One signed term; ``first`` controls the leading separator.

    ``mono`` overrides the monomial text (used for tensor legs).
    """
    text = c.render()
    neg = False
    if text.startswith("-"):
        alt = (-c).render()
        if not alt.startswith("-"):
            neg, text = True, alt
    if mono is None:
        mono = render_monomial(m)
    if not mono:
        body = text if _single_term(text) else f"({text})"
    elif text == "1":
        body = mono
    elif _single_term(text):
        body = f"{text} * {mono}"
    else:
        body = f"({text}) * {mono}"
    if first:
        return ("-" if neg else "") + body
    return (" - " if neg else " + ") + body


def render_terms(terms):
    if not terms:
        return "0"
    out = []
    for i, m in enumerate(sorted(terms)):
        out.append(render_term(terms[m], m, i == 0))
    return "".join(out)


def render_element(x):
    return render_terms(x.terms)


def element_json(x):
    return [{"monomial": list(m), "coeff": x.terms[m].render()} for m in sorted(x.terms)]
