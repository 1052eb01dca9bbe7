"""Operators on the mirabolic module as sparse columns over the standard basis."""
from mirabolic_howe.algebra.action import act_algebra_word
from mirabolic_howe.algebra.decorated import enumerate_decorated
from mirabolic_howe.algebra.module import ModuleElement, Side


class OperatorMatrix(object):
    """A linear map on MV_{n|m,d} stored column by column.

    :param context (Context)    : the module context
    :param columns (dict)       : basis DecoratedMatrix -> ModuleElement image; absent columns are zero
    """

    def __init__(self, context, columns):
        self.context = context
        self.columns = {x: image for x, image in columns.items() if not image.is_zero()}

    @classmethod
    def from_word(cls, context, side, tokens, basis=None):
        basis = basis if basis is not None else enumerate_decorated(*context.as_tuple())
        return cls(context, {x: act_algebra_word(side, tokens, ModuleElement.basis(x)) for x in basis})

    def is_zero(self):
        return not self.columns

    def first_nonzero(self):
        """(basis element, image) of the first nonzero column in canonical order, or None."""
        if not self.columns:
            return None
        x = min(self.columns, key=lambda key: key.sort_key())
        return x, self.columns[x]

    def __add__(self, other):
        columns = dict(self.columns)
        for x, image in other.columns.items():
            columns[x] = columns[x] + image if x in columns else image
        return OperatorMatrix(self.context, columns)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, coefficient):
        return OperatorMatrix(self.context, {x: image.scale(coefficient) for x, image in self.columns.items()})

    def apply(self, element):
        result = ModuleElement.zero(self.context)
        for x, coefficient in element.items():
            if x in self.columns:
                result = result + self.columns[x].scale(coefficient)
        return result

    def compose(self, other):
        """self after other."""
        return OperatorMatrix(self.context, {x: self.apply(image) for x, image in other.columns.items()})

    def to_json(self):
        return [{'column': x.to_json(), 'image': image.to_json()}
                for x, image in sorted(self.columns.items(), key=lambda item: item[0].sort_key())]


def token_operator(context, side, token, basis=None):
    return OperatorMatrix.from_word(context, side, [token], basis)


def identity_operator(context, basis=None):
    basis = basis if basis is not None else enumerate_decorated(*context.as_tuple())
    return OperatorMatrix(context, {x: ModuleElement.basis(x) for x in basis})


def algebra_size(context, side):
    return context.n if side is Side.LEFT else context.m

