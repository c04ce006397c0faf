"""Reference result tables for k = 0..6, transcribed in LaTeX.

Each entry is keyed by ``(family, k, form)`` and holds one printed line of the
reference tables, alignment macros included.  :func:`normalize_latex` strips
the layout-only parts; :func:`latex_to_text` maps a normalised line to the
plain-text rendering.
"""

from __future__ import annotations

import re

__all__ = ["RESULT_LINES", "normalize_latex", "latex_to_text", "golden_latex", "golden_text"]

RESULT_LINES: dict[tuple[str, int, str], str] = {
    ('sin', 0, 'intermediate'): '\\sin^{n-0}(x) \\bigl[1\\bigr]',
    ('sin', 0, 'final'): '\\sin^{n-0}(x) \\bigl[1\\bigr] = \\sin^n(x)',
    ('sin', 1, 'intermediate'): '\\sin^{n-1}(x) \\bigl[n \\cos(x)\\bigr]',
    ('sin', 1, 'final'): '\\sin^{n-1}(x) \\cos(x) \\bigl[n\\bigr]',
    ('sin', 2, 'intermediate'): '\\sin^{n-2}(x) \\bigl[n^2 \\cos^2(x) - n\\bigr]',
    ('sin', 2, 'final'): '-\\sin^{n-2}(x) \\bigl[n^2 \\sin^2(x) + (-n^2 + n)\\bigr]',
    ('sin', 3, 'intermediate'): '\\sin^{n-3}(x) \\bigl[n^3 \\cos^3(x) + (-3 n^2 + 2 n) \\cos(x)\\bigr]',
    ('sin', 3, 'final'): '-\\sin^{n-3}(x) \\cos(x) \\bigl[n^3 \\sin^2(x) + (-n^3 + 3 n^2 - 2 n)\\bigr]',
    ('sin', 4, 'intermediate'): '\\sin^{n-4}(x) \\bigl[n^4 \\cos^4(x) + (-6 n^3 + 8 n^2 - 4 n) \\cos^2(x) + (3 n^2 - 2 n)\\bigr]',
    ('sin', 4, 'final'): '\\sin^{n-4}(x) \\bigl[n^4 \\sin^4(x) + (-2 n^4 + 6 n^3 - 8 n^2 + 4 n) \\sin^2(x) + (n^4 - 6 n^3 + 11 n^2 - 6 n)\\bigr]',
    ('sin', 5, 'intermediate'): '\\sin^{n-5}(x) \\bigl[n^5 \\cos^5(x) + (-10 n^4 + 20 n^3 - 20 n^2 + 8 n) \\cos^3(x) \\phantom{ = \\sin^{n-5}(x)}\\;+ (15 n^3 - 30 n^2 + 16 n) \\cos(x)\\bigr]',
    ('sin', 5, 'final'): '\\sin^{n-5}(x) \\cos(x) \\bigl[n^5 \\sin^4(x) + (-2 n^5 + 10 n^4 - 20 n^3 + 20 n^2 - 8 n) \\sin^2(x) \\phantom{ = \\sin^{n-5}(x) \\cos(x)}\\;+ (n^5 - 10 n^4 + 35 n^3 - 50 n^2 + 24 n)\\bigr]',
    ('sin', 6, 'intermediate'): '\\sin^{n-6}(x) \\bigl[n^6 \\cos^6(x) + (-15 n^5 + 40 n^4 - 60 n^3 + 48 n^2 - 16 n) \\cos^4(x) \\phantom{ = \\sin^{n-6}(x)}\\;+ (45 n^4 - 150 n^3 + 196 n^2 - 88 n) \\cos^2(x) + (-15 n^3 + 30 n^2 - 16 n)\\bigr]',
    ('sin', 6, 'final'): '-\\sin^{n-6}(x) \\bigl[n^6 \\sin^6(x) + (-3 n^6 + 15 n^5 - 40 n^4 + 60 n^3 - 48 n^2 + 16 n) \\sin^4(x) \\phantom{ = -\\sin^{n-6}(x)}\\;+ (3 n^6 - 30 n^5 + 125 n^4 - 270 n^3 + 292 n^2 - 120 n) \\sin^2(x) \\phantom{ = -\\sin^{n-6}(x)}\\;+ (-n^6 + 15 n^5 - 85 n^4 + 225 n^3 - 274 n^2 + 120 n)\\bigr]',
    ('cos', 0, 'intermediate'): '\\cos^{n-0}(x) \\bigl[1\\bigr]',
    ('cos', 0, 'final'): '\\cos^{n-0}(x) \\bigl[1\\bigr] = \\cos^n(x)',
    ('cos', 1, 'intermediate'): '-\\cos^{n-1}(x) \\bigl[n \\sin(x)\\bigr]',
    ('cos', 1, 'final'): '-\\cos^{n-1}(x) \\sin(x) \\bigl[n\\bigr]',
    ('cos', 2, 'intermediate'): '\\cos^{n-2}(x) \\bigl[n^2 \\sin^2(x) - n\\bigr]',
    ('cos', 2, 'final'): '-\\cos^{n-2}(x) \\bigl[n^2 \\cos^2(x) + (-n^2 + n)\\bigr]',
    ('cos', 3, 'intermediate'): '-\\cos^{n-3}(x) \\bigl[n^3 \\sin^3(x) + (-3 n^2 + 2 n) \\sin(x)\\bigr]',
    ('cos', 3, 'final'): '\\cos^{n-3}(x) \\sin(x) \\bigl[n^3 \\cos^2(x) + (-n^3 + 3 n^2 - 2 n)\\bigr]',
    ('cos', 4, 'intermediate'): '\\cos^{n-4}(x) \\bigl[n^4 \\sin^4(x) + (-6 n^3 + 8 n^2 - 4 n) \\sin^2(x) + (3 n^2 - 2 n)\\bigr]',
    ('cos', 4, 'final'): '\\cos^{n-4}(x) \\bigl[n^4 \\cos^4(x) + (-2 n^4 + 6 n^3 - 8 n^2 + 4 n) \\cos^2(x) + (n^4 - 6 n^3 + 11 n^2 - 6 n)\\bigr]',
    ('cos', 5, 'intermediate'): '-\\cos^{n-5}(x) \\bigl[n^5 \\sin^5(x) + (-10 n^4 + 20 n^3 - 20 n^2 + 8 n) \\sin^3(x) \\phantom{ = -\\cos^{n-5}(x)}\\;+ (15 n^3 - 30 n^2 + 16 n) \\sin(x)\\bigr]',
    ('cos', 5, 'final'): '-\\cos^{n-5}(x) \\sin(x) \\bigl[n^5 \\cos^4(x) + (-2 n^5 + 10 n^4 - 20 n^3 + 20 n^2 - 8 n) \\cos^2(x) \\phantom{ = -\\cos^{n-5}(x) \\sin(x)}\\;+ (n^5 - 10 n^4 + 35 n^3 - 50 n^2 + 24 n)\\bigr]',
    ('cos', 6, 'intermediate'): '\\cos^{n-6}(x) \\bigl[n^6 \\sin^6(x) + (-15 n^5 + 40 n^4 - 60 n^3 + 48 n^2 - 16 n) \\sin^4(x) \\phantom{ = \\cos^{n-6}(x)}\\;+ (45 n^4 - 150 n^3 + 196 n^2 - 88 n) \\sin^2(x) + (-15 n^3 + 30 n^2 - 16 n)\\bigr]',
    ('cos', 6, 'final'): '-\\cos^{n-6}(x) \\bigl[n^6 \\cos^6(x) + (-3 n^6 + 15 n^5 - 40 n^4 + 60 n^3 - 48 n^2 + 16 n) \\cos^4(x) \\phantom{ = -\\cos^{n-6}(x)}\\;+ (3 n^6 - 30 n^5 + 125 n^4 - 270 n^3 + 292 n^2 - 120 n) \\cos^2(x) \\phantom{ = -\\cos^{n-6}(x)}\\;+ (-n^6 + 15 n^5 - 85 n^4 + 225 n^3 - 274 n^2 + 120 n)\\bigr]',
    ('sinh', 0, 'intermediate'): '\\sinh^{n-0}(x) \\bigl[1\\bigr]',
    ('sinh', 0, 'final'): '\\sinh^{n-0}(x) \\bigl[1\\bigr] = \\sinh^n(x)',
    ('sinh', 1, 'intermediate'): '\\sinh^{n-1}(x) \\bigl[n \\cosh(x)\\bigr]',
    ('sinh', 1, 'final'): '\\sinh^{n-1}(x) \\cosh(x) \\bigl[n\\bigr]',
    ('sinh', 2, 'intermediate'): '\\sinh^{n-2}(x) \\bigl[n^2 \\cosh^2(x) - n\\bigr]',
    ('sinh', 2, 'final'): '\\sinh^{n-2}(x) \\bigl[n^2 \\sinh^2(x) + (n^2 - n)\\bigr]',
    ('sinh', 3, 'intermediate'): '\\sinh^{n-3}(x) \\bigl[n^3 \\cosh^3(x) + (-3 n^2 + 2 n) \\cosh(x)\\bigr]',
    ('sinh', 3, 'final'): '\\sinh^{n-3}(x) \\cosh(x) \\bigl[n^3 \\sinh^2(x) + (n^3 - 3 n^2 + 2 n)\\bigr]',
    ('sinh', 4, 'intermediate'): '\\sinh^{n-4}(x) \\bigl[n^4 \\cosh^4(x) + (-6 n^3 + 8 n^2 - 4 n) \\cosh^2(x) + (3 n^2 - 2 n)\\bigr]',
    ('sinh', 4, 'final'): '\\sinh^{n-4}(x) \\bigl[n^4 \\sinh^4(x) + (2 n^4 - 6 n^3 + 8 n^2 - 4 n) \\sinh^2(x) + (n^4 - 6 n^3 + 11 n^2 - 6 n)\\bigr]',
    ('sinh', 5, 'intermediate'): '\\sinh^{n-5}(x) \\bigl[n^5 \\cosh^5(x) + (-10 n^4 + 20 n^3 - 20 n^2 + 8 n) \\cosh^3(x) \\phantom{ = \\sinh^{n-5}(x)}\\;+ (15 n^3 - 30 n^2 + 16 n) \\cosh(x)\\bigr]',
    ('sinh', 5, 'final'): '\\sinh^{n-5}(x) \\cosh(x) \\bigl[n^5 \\sinh^4(x) + (2 n^5 - 10 n^4 + 20 n^3 - 20 n^2 + 8 n) \\sinh^2(x) \\phantom{ = \\sinh^{n-5}(x) \\cosh(x)}\\;+ (n^5 - 10 n^4 + 35 n^3 - 50 n^2 + 24 n)\\bigr]',
    ('sinh', 6, 'intermediate'): '\\sinh^{n-6}(x) \\bigl[n^6 \\cosh^6(x) + (-15 n^5 + 40 n^4 - 60 n^3 + 48 n^2 - 16 n) \\cosh^4(x) \\phantom{ = \\sinh^{n-6}(x)}\\;+ (45 n^4 - 150 n^3 + 196 n^2 - 88 n) \\cosh^2(x) + (-15 n^3 + 30 n^2 - 16 n)\\bigr]',
    ('sinh', 6, 'final'): '\\sinh^{n-6}(x) \\bigl[n^6 \\sinh^6(x) + (3 n^6 - 15 n^5 + 40 n^4 - 60 n^3 + 48 n^2 - 16 n) \\sinh^4(x) \\phantom{ = \\sinh^{n-6}(x)}\\;+ (3 n^6 - 30 n^5 + 125 n^4 - 270 n^3 + 292 n^2 - 120 n) \\sinh^2(x) \\phantom{ = \\sinh^{n-6}(x)}\\;+ (n^6 - 15 n^5 + 85 n^4 - 225 n^3 + 274 n^2 - 120 n)\\bigr]',
    ('cosh', 0, 'intermediate'): '\\cosh^{n-0}(x) \\bigl[1\\bigr]',
    ('cosh', 0, 'final'): '\\cosh^{n-0}(x) \\bigl[1\\bigr] = \\cosh^n(x)',
    ('cosh', 1, 'intermediate'): '\\cosh^{n-1}(x) \\bigl[n \\sinh(x)\\bigr]',
    ('cosh', 1, 'final'): '\\cosh^{n-1}(x) \\sinh(x) \\bigl[n\\bigr]',
    ('cosh', 2, 'intermediate'): '\\cosh^{n-2}(x) \\bigl[n^2 \\sinh^2(x) + n\\bigr]',
    ('cosh', 2, 'final'): '\\cosh^{n-2}(x) \\bigl[n^2 \\cosh^2(x) + (-n^2 + n)\\bigr]',
    ('cosh', 3, 'intermediate'): '\\cosh^{n-3}(x) \\bigl[n^3 \\sinh^3(x) + (3 n^2 - 2 n) \\sinh(x)\\bigr]',
    ('cosh', 3, 'final'): '\\cosh^{n-3}(x) \\sinh(x) \\bigl[n^3 \\cosh^2(x) + (-n^3 + 3 n^2 - 2 n)\\bigr]',
    ('cosh', 4, 'intermediate'): '\\cosh^{n-4}(x) \\bigl[n^4 \\sinh^4(x) + (6 n^3 - 8 n^2 + 4 n) \\sinh^2(x) + (3 n^2 - 2 n)\\bigr]',
    ('cosh', 4, 'final'): '\\cosh^{n-4}(x) \\bigl[n^4 \\cosh^4(x) + (-2 n^4 + 6 n^3 - 8 n^2 + 4 n) \\cosh^2(x) \\phantom{ = \\cosh^{n-4}(x)}\\;+ (n^4 - 6 n^3 + 11 n^2 - 6 n)\\bigr]',
    ('cosh', 5, 'intermediate'): '\\cosh^{n-5}(x) \\bigl[n^5 \\sinh^5(x) + (10 n^4 - 20 n^3 + 20 n^2 - 8 n) \\sinh^3(x) \\phantom{ = \\cosh^{n-5}(x)}\\;+ (15 n^3 - 30 n^2 + 16 n) \\sinh(x)\\bigr]',
    ('cosh', 5, 'final'): '\\cosh^{n-5}(x) \\sinh(x) \\bigl[n^5 \\cosh^4(x) + (-2 n^5 + 10 n^4 - 20 n^3 + 20 n^2 - 8 n) \\cosh^2(x) \\phantom{ = \\cosh^{n-5}(x) \\sinh(x)}\\;+ (n^5 - 10 n^4 + 35 n^3 - 50 n^2 + 24 n)\\bigr]',
    ('cosh', 6, 'intermediate'): '\\cosh^{n-6}(x) \\bigl[n^6 \\sinh^6(x) + (15 n^5 - 40 n^4 + 60 n^3 - 48 n^2 + 16 n) \\sinh^4(x) \\phantom{ = \\cosh^{n-6}(x)}\\;+ (45 n^4 - 150 n^3 + 196 n^2 - 88 n) \\sinh^2(x) + (15 n^3 - 30 n^2 + 16 n)\\bigr]',
    ('cosh', 6, 'final'): '\\cosh^{n-6}(x) \\bigl[n^6 \\cosh^6(x) + (-3 n^6 + 15 n^5 - 40 n^4 + 60 n^3 - 48 n^2 + 16 n) \\cosh^4(x) \\phantom{ = \\cosh^{n-6}(x)}\\;+ (3 n^6 - 30 n^5 + 125 n^4 - 270 n^3 + 292 n^2 - 120 n) \\cosh^2(x) \\phantom{ = \\cosh^{n-6}(x)}\\;+ (-n^6 + 15 n^5 - 85 n^4 + 225 n^3 - 274 n^2 + 120 n)\\bigr]',
}


def _strip_phantoms(s: str) -> str:
    out = []
    i = 0
    while i < len(s):
        if s.startswith("\\phantom{", i):
            depth = 0
            j = i + len("\\phantom")
            while True:
                if s[j] == "{":
                    depth += 1
                elif s[j] == "}":
                    depth -= 1
                    if depth == 0:
                        break
                j += 1
            i = j + 1
        else:
            out.append(s[i])
            i += 1
    return "".join(out)


def normalize_latex(s: str) -> str:
    """Drop alignment padding and a trailing ``= base^n(x)`` restatement; collapse spaces."""
    s = _strip_phantoms(s).replace("\\;", " ")
    s = re.sub(r"\\bigr\]\s*=.*$", r"\\bigr]", s)
    return " ".join(s.split())


def latex_to_text(s: str) -> str:
    s = normalize_latex(s)
    s = s.replace("\\bigl[", "[").replace("\\bigr]", "]")
    s = re.sub(r"\^\{([^}]*)\}", r"^(\1)", s)
    return s.replace("\\", "")


def golden_latex(family: str, k: int, form: str) -> str:
    return normalize_latex(RESULT_LINES[(family, k, form)])


def golden_text(family: str, k: int, form: str) -> str:
    return latex_to_text(RESULT_LINES[(family, k, form)])
