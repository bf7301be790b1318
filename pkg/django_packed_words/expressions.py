"""
Text and JSON forms of linear combinations.

Grammar::

    expression := ["-"] term (("+" | "-") term)* | "0"
    term       := [integer ["/" integer] ["*"]] tensor
    tensor     := label (("⊗" | "@") label)*
    label      := "[" ints "]"          packed word
                | "(" ints ")"          composition
                | "(" int ";" ints ")"  extended composition
                | "Z" label             dual basis element
                | "M(" ints ")"         quasi-symmetric monomial
                | "M*(" ints ")"        its dual in NSym

Terms are rendered in canonical order, integer coefficients juxtaposed
(``2[1,2]``) and fractions as ``p/q*label``; tensor factors are joined by
`` ⊗ ``.
"""
import json
from fractions import Fraction

from .compositions import Composition, ExtComposition
from .exceptions import ExpressionSyntaxError, StructureError
from .hopfcore import DualElement
from .pword import PackedWord
from .qsymnsym import Monomial
from .scalars import BasisLabel, LinComb, TensorTerm

JSON_SCHEMA = 1
TENSOR_SEPARATORS = ("⊗", "@")


def _is_digit(ch):
    return "0" <= ch <= "9"


class _Parser(object):
    def __init__(self, text):
        self.text = text
        self.position = 0

    def error(self, message, position=None):
        raise ExpressionSyntaxError(message, self.position if position is None else position)

    def skip_spaces(self):
        while self.position < len(self.text) and self.text[self.position].isspace():
            self.position += 1

    def peek(self):
        self.skip_spaces()
        return self.text[self.position] if self.position < len(self.text) else ""

    def accept(self, token):
        self.skip_spaces()
        if self.text.startswith(token, self.position):
            self.position += len(token)
            return True
        return False

    def expect(self, token):
        if not self.accept(token):
            found = self.peek() or "end of input"
            self.error("expected %r, found %r" % (token, found))

    def integer(self):
        self.skip_spaces()
        start = self.position
        while self.position < len(self.text) and _is_digit(self.text[self.position]):
            self.position += 1
        if start == self.position:
            self.error("expected an integer")
        return int(self.text[start:self.position])

    def integers(self, closing):
        values = []
        if self.peek() == closing:
            return values
        values.append(self.integer())
        while self.accept(","):
            values.append(self.integer())
        return values

    def build(self, factory, start, *args):
        try:
            return factory(*args)
        except StructureError as exc:
            self.error(str(exc), start)

    def label(self):
        self.skip_spaces()
        start = self.position
        if self.accept("Z"):
            inner = self.label()
            if isinstance(inner, (DualElement, Monomial)):
                self.error("Z applies to words and compositions", start)
            return DualElement(inner)
        if self.accept("M*("):
            parts = self.integers(")")
            self.expect(")")
            return DualElement(self.build(Monomial, start, parts))
        if self.accept("M("):
            parts = self.integers(")")
            self.expect(")")
            return self.build(Monomial, start, parts)
        if self.accept("["):
            letters = self.integers("]")
            self.expect("]")
            return self.build(PackedWord, start, letters)
        if self.accept("("):
            values = self.integers(")")
            if self.accept(";"):
                if len(values) != 1:
                    self.error("an extended composition has one leading x0 count", start)
                parts = self.integers(")")
                self.expect(")")
                return self.build(ExtComposition, start, values[0], parts)
            self.expect(")")
            return self.build(Composition, start, values)
        self.error("expected a basis label, found %r" % (self.peek() or "end of input"))

    def tensor(self):
        factors = [self.label()]
        while any(self.accept(separator) for separator in TENSOR_SEPARATORS):
            factors.append(self.label())
        return factors[0] if len(factors) == 1 else TensorTerm(factors)

    def coefficient(self):
        if not _is_digit(self.peek()):
            return Fraction(1)
        start = self.position
        numerator = self.integer()
        denominator = 1
        if self.accept("/"):
            denominator = self.integer()
            if not denominator:
                self.error("zero denominator", start)
        self.accept("*")
        return Fraction(numerator, denominator)

    def term(self, sign):
        coefficient = self.coefficient()
        if not self.peek() or self.peek() in "+-":
            if coefficient == 0:
                return None
            self.error("expected a basis label after the coefficient")
        return self.tensor(), sign * coefficient

    def expression(self):
        terms = []
        sign = -1 if self.accept("-") else 1
        while True:
            start = self.position
            term = self.term(sign)
            if term is None:
                if terms or sign < 0:
                    self.error("a zero term must stand alone", start)
            else:
                terms.append(term)
            if self.accept("+"):
                sign = 1
            elif self.accept("-"):
                sign = -1
            else:
                break
        self.skip_spaces()
        if self.position != len(self.text):
            self.error("unexpected %r" % self.text[self.position])
        _check_family(terms, self)
        return LinComb(terms)


def _family(label):
    factors = label.factors if isinstance(label, TensorTerm) else (label,)
    return tuple(
        (type(factor).__name__, type(factor.primal).__name__ if isinstance(factor, DualElement) else None)
        for factor in factors
    )


def _check_family(terms, parser):
    families = set(_family(label) for label, _ in terms)
    if len(families) > 1:
        parser.error("an expression mixes basis families", 0)


def parse(text):
    """Parse ``text`` into a LinComb; errors carry the offending position."""
    if not isinstance(text, str):
        raise ExpressionSyntaxError("expressions are strings", 0)
    return _Parser(text).expression()


def parse_label(text):
    parser = _Parser(text)
    label = parser.tensor()
    parser.skip_spaces()
    if parser.position != len(text):
        parser.error("unexpected %r" % text[parser.position])
    return label


def render_label(label):
    if isinstance(label, TensorTerm):
        return " ⊗ ".join(str(factor) for factor in label.factors)
    return str(label)


def _render_term(label, coefficient):
    magnitude = abs(coefficient)
    text = render_label(label)
    if magnitude == 1:
        return text
    if magnitude.denominator == 1:
        return "%d%s" % (magnitude.numerator, text)
    return "%d/%d*%s" % (magnitude.numerator, magnitude.denominator, text)


def render(x):
    if isinstance(x, BasisLabel):
        return render_label(x)
    if not x:
        return "0"
    pieces = []
    for index, (label, c) in enumerate(x):
        term = _render_term(label, c)
        if index == 0:
            pieces.append("-" + term if c < 0 else term)
        else:
            pieces.append(("- " if c < 0 else "+ ") + term)
    return " ".join(pieces)


def to_json(x):
    return json.dumps(
        {
            "schema": JSON_SCHEMA,
            "terms": [
                {"term": render_label(label), "numerator": c.numerator, "denominator": c.denominator}
                for label, c in x
            ],
        },
        ensure_ascii=False,
    )


def from_json(text):
    try:
        document = json.loads(text)
    except ValueError as exc:
        raise ExpressionSyntaxError("invalid JSON: %s" % exc, getattr(exc, "pos", 0))
    if not isinstance(document, dict) or document.get("schema") != JSON_SCHEMA:
        raise StructureError("expected a schema %d document" % JSON_SCHEMA)
    try:
        terms = [(term["term"], term["numerator"], term["denominator"]) for term in document["terms"]]
    except (KeyError, TypeError) as exc:
        raise StructureError("malformed schema %d document: %s" % (JSON_SCHEMA, exc))
    return LinComb((parse_label(label), Fraction(numerator, denominator)) for label, numerator, denominator in terms)
