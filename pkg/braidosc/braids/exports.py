"""
JSON and CSV serialisation of generator matrices.

JSON is the canonical format and reloads exactly. CSV carries decimal
approximations and announces itself as lossy in its first line.
"""
import csv
import io
import json

from braidosc.algebra.oscillator import RepLabel
from braidosc.algebra.scalars import GlobalPhase, LaurentScalar

from .matrices import BraidMatrix

CSV_HEADER = ('generator', 'row', 'column', 'value')
LOSSY_MARKER = '# lossy: decimal approximations; use JSON for exact values'


def matrices_to_dict(matrices, context, route, N):
    first = matrices[0]
    return {
        'n': context.n,
        'N': N,
        'labels': [label.to_json() for label in context.labels],
        'q': None if context.q is None else context.q.to_json(),
        'backend': context.backend.name,
        'route': route,
        'basis': first.basis.get('basis', []),
        'order': first.basis.get('order'),
        'phase': first.phase.to_json(),
        'phase_applied': first.phase_applied,
        'matrices': [matrix.to_json() for matrix in matrices],
    }


def dumps_json(matrices, context, route, N):
    return json.dumps(matrices_to_dict(matrices, context, route, N), indent=2)


def loads_json(text):
    """(labels, list of BraidMatrix) from a JSON export."""
    data = json.loads(text) if isinstance(text, str) else text
    labels = [RepLabel(label['gamma'], label['c']) for label in data['labels']]
    phase = GlobalPhase.from_json(data['phase'])
    basis = {'basis': data.get('basis', []), 'order': data.get('order'), 'n': data['n'], 'N': data['N']}
    matrices = [BraidMatrix.from_json(entry, basis, phase, data.get('route')) for entry in data['matrices']]
    return labels, matrices


def _decimal(value):
    if isinstance(value, LaurentScalar):
        return str(value)
    return '{:.17g}'.format(float(value))


def dumps_csv(matrices):
    stream = io.StringIO()
    stream.write(LOSSY_MARKER + '\n')
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for matrix in matrices:
        for r, row in enumerate(matrix.entries):
            for c, value in enumerate(row):
                writer.writerow((matrix.generator.letter, r, c, _decimal(value)))
    return stream.getvalue()


def render_entries(title, entries, names=None):
    names = names or []
    lines = ['{}:'.format(title)]
    rendered = [[_decimal(value) for value in row] for row in entries]
    width = max((len(cell) for row in rendered for cell in row), default=1)
    for r, row in enumerate(rendered):
        prefix = '{:>8} '.format(names[r]) if r < len(names) else ''
        lines.append(prefix + '  '.join(cell.rjust(width) for cell in row))
    return '\n'.join(lines) + '\n'


def dumps_text(matrices, names=None):
    """Plain aligned rendering for terminals."""
    return ''.join(render_entries(str(matrix.generator), matrix.entries, names) for matrix in matrices)
