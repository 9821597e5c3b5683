from linrel.algebra.relation import (LinearRelation, RelationParts, RelationSum, add, adjoint,
                                     compose, decompose, eigenspace, from_operator, inverse, join,
                                     negate, parts, restrict, scale, shift)
from linrel.algebra.subspace import (Subspace, SubspaceSum, complement, intersect, ominus, span,
                                     subspace_sum)
