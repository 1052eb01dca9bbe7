"""Text and JSON forms of module elements.

Text form: terms in canonical order joined by ' + ', each '(coefficient)*label' or just the label
when the coefficient is 1, e.g. '(v^-2)*[[1]]{} + (v^-1)*[[1]]{(1,1)}'. The zero element is '0'.
"""
from mirabolic_howe.algebra.decorated import DecoratedMatrix
from mirabolic_howe.algebra.laurent import format_laurent, parse_laurent
from mirabolic_howe.algebra.module import ModuleElement
from mirabolic_howe.verify.report import canonical_json

FORMATS = ('text', 'json')


def element_to_text(element):
    if element.is_zero():
        return '0'
    pieces = []
    for x, coefficient in element.items():
        if coefficient == 1:
            pieces.append(x.label())
        else:
            pieces.append('({})*{}'.format(format_laurent(coefficient), x.label()))
    return ' + '.join(pieces)


def _split_terms(text):
    """Splits at ' + ' outside parentheses and brackets."""
    terms, depth, start, k = [], 0, 0, 0
    while k < len(text):
        char = text[k]
        if char in '([{':
            depth += 1
        elif char in ')]}':
            depth -= 1
        elif depth == 0 and text.startswith(' + ', k):
            terms.append(text[start:k])
            start = k + 3
            k += 3
            continue
        k += 1
    terms.append(text[start:])
    return [term.strip() for term in terms]


def element_from_text(text, context):
    """Inverse of element_to_text; the context is needed for the zero element."""

    text = text.strip()
    if text == '0':
        return ModuleElement.zero(context)
    terms = []
    for term in _split_terms(text):
        if term.startswith('('):
            close = term.index(')*[')
            coefficient = parse_laurent(term[1:close])
            label = term[close + 2:]
        else:
            coefficient, label = 1, term
        terms.append((DecoratedMatrix.from_label(label), coefficient))
    return ModuleElement(context, terms)


def serialize_element(element, output='text'):
    """Canonical text or JSON rendering of a module element."""
    if output == 'text':
        return element_to_text(element)
    if output == 'json':
        return canonical_json(element.to_json())
    raise ValueError('unknown output format {!r}; choose from {}'.format(output, FORMATS))


def render(payload, output='json', text=None):
    """Renders a command payload: canonical JSON, or the given text form (falls back to JSON)."""
    if output == 'text' and text is not None:
        return text
    return canonical_json(payload)
