"""
Readers and writers for the JSON and CSV files understood by galois-kit: lattices, relations,
operator tables, vectors and formal contexts.
"""
from __future__ import annotations

import csv
import json
import logging
import pathlib as pl
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Sequence, Union

from .errors import FormatError
from .fca import FuzzyContext
from .lattice import TABLE_NAMES, LatticeKind, LatticeSpec, make_custom_lattice, \
    make_goedel_chain, make_lukasiewicz_chain, parse_label
from .operator import OperatorTable, ProvenanceKind
from .relation import FuzzyRelation, IndexSet, build_relation
from .vector import FuzzyVector

logger = logging.getLogger(__name__)

PathLike = Union[str, pl.Path]


def read_json(path: PathLike) -> Any:
    """
    :raises OSError: If the file cannot be read.
    :raises FormatError: If the file is not valid JSON.
    """
    path = pl.Path(path)
    with open(path, 'r', encoding='utf-8') as reader:
        try:
            return json.load(reader)
        except json.JSONDecodeError as error:
            raise FormatError(f'{path}: invalid JSON ({error.msg} at line {error.lineno})') \
                from error
        except UnicodeDecodeError as error:
            raise FormatError(f'{path}: not UTF-8 encoded (byte {error.start})') from error


def _strings(values: Any, where: str) -> List[str]:
    if not isinstance(values, list) or not all(isinstance(value, str) for value in values):
        raise FormatError(f'{where} must be a list of strings')
    return values


def _field(data: Any, name: str, where: str) -> Any:
    if not isinstance(data, dict):
        raise FormatError(f'{where}: expected a JSON object')
    if name not in data:
        raise FormatError(f'{where}: missing field "{name}"')
    return data[name]


def _names(data: Any, name: str, where: str) -> IndexSet:
    values = _strings(_field(data, name, where), f'{where}: field "{name}"')
    try:
        return IndexSet(values)
    except FormatError as error:
        raise FormatError(f'{where}: field "{name}": {error}') from error


def lattice_from_json(data: Any, where: str = 'lattice') -> LatticeSpec:
    """
    Builds a lattice from its JSON form. Chain kinds are regenerated from the number of labels
    and the labels must match the generated ones; custom kinds need all four tables, whose
    entries are carrier labels.

    :raises FormatError: If a field is missing or malformed.
    :raises LawViolationError: If custom tables violate a residuated-lattice law.
    """
    labels = _field(data, 'labels', where)
    if not isinstance(labels, list):
        raise FormatError(f'{where}: field "labels" must be a list')
    raw_kind = data.get('kind', LatticeKind.CUSTOM.value)
    try:
        kind = LatticeKind(raw_kind)
    except ValueError as error:
        raise FormatError(f'{where}: unknown kind "{raw_kind}"') from error

    parsed = [parse_label(label) for label in labels]
    if kind is LatticeKind.CUSTOM:
        tables = _field(data, 'tables', where)
        if not isinstance(tables, dict):
            raise FormatError(f'{where}: field "tables" must be an object')
        position = {label: idx for idx, label in enumerate(parsed)}
        indexed = {}
        for name in TABLE_NAMES:
            rows = _field(tables, name, f'{where}.tables')
            try:
                indexed[name] = [[position[parse_label(entry)] for entry in row] for row in rows]
            except KeyError as error:
                raise FormatError(f'{where}.tables.{name}: label not in the carrier') from error
            except TypeError as error:
                raise FormatError(f'{where}.tables.{name}: rows must be lists of labels') \
                    from error
        return make_custom_lattice(parsed, indexed)

    factory = make_lukasiewicz_chain if kind is LatticeKind.LUKASIEWICZ else make_goedel_chain
    if len(parsed) < 2:
        raise FormatError(f'{where}: field "labels" needs at least two labels')
    spec = factory(len(parsed))
    if tuple(parsed) != spec.labels:
        raise FormatError(f'{where}: labels do not match the {kind.value} chain of size '
                          f'{len(parsed)}')
    return spec


def lattice_to_json(spec: LatticeSpec) -> dict:
    label = spec.label_of
    result = {'kind': spec.kind.value, 'labels': [label(x) for x in spec.elements()]}
    if spec.kind is LatticeKind.CUSTOM:
        result['tables'] = {
            name: [[label(v) for v in row] for row in getattr(spec, f'{name}_table')]
            for name in TABLE_NAMES
        }
    return result


def load_lattice(path: PathLike) -> LatticeSpec:
    path = pl.Path(path)
    return lattice_from_json(read_json(path), str(path))


def dump_lattice(spec: LatticeSpec, path: PathLike) -> None:
    with open(path, 'w', encoding='utf-8') as writer:
        json.dump(lattice_to_json(spec), writer, sort_keys=True, indent=2)
        writer.write('\n')


def _resolve_lattice(reference: Any, base_dir: pl.Path, where: str,
                     lattice: Optional[LatticeSpec]) -> LatticeSpec:
    if reference is None:
        if lattice is None:
            raise FormatError(f'{where}: missing field "lattice"')
        return lattice
    if isinstance(reference, str):
        resolved = load_lattice(base_dir / reference)
    else:
        resolved = lattice_from_json(reference, f'{where}.lattice')
    if lattice is not None and resolved != lattice:
        raise FormatError(f'{where}: field "lattice" differs from the given lattice')
    return resolved


def relation_from_json(data: Any, base_dir: pl.Path = pl.Path('.'),
                       lattice: Optional[LatticeSpec] = None,
                       where: str = 'relation') -> FuzzyRelation:
    """
    Builds a relation from its JSON form. The "lattice" field may be a path relative to
    base_dir or an inline lattice object; it may be omitted if a lattice is passed.

    :raises FormatError: If a field, index name or label is invalid.
    """
    spec = _resolve_lattice(data.get('lattice') if isinstance(data, dict) else None,
                            base_dir, where, lattice)
    domain = _names(data, 'domain', where)
    codomain = _names(data, 'codomain', where)
    entries = data.get('entries', [])
    if not isinstance(entries, list):
        raise FormatError(f'{where}: field "entries" must be a list of objects')
    triples = []
    for number, entry in enumerate(entries):
        item = f'{where}.entries[{number}]'
        triple = tuple(_field(entry, key, item) for key in ('i', 'j', 'v'))
        _strings(list(triple), f'{item}: fields "i", "j" and "v"')
        triples.append(triple)
    return build_relation(spec, domain, codomain, triples)


def relation_to_json(relation: FuzzyRelation) -> dict:
    result = relation.to_json()
    result['lattice'] = lattice_to_json(relation.lattice)
    return result


def load_relation(path: PathLike, lattice: Optional[LatticeSpec] = None) -> FuzzyRelation:
    path = pl.Path(path)
    return relation_from_json(read_json(path), path.parent, lattice, str(path))


def dump_relation(relation: FuzzyRelation, path: PathLike) -> None:
    with open(path, 'w', encoding='utf-8') as writer:
        json.dump(relation_to_json(relation), writer, sort_keys=True, indent=2)
        writer.write('\n')


def load_operator(path: PathLike, lattice: Optional[LatticeSpec] = None) -> OperatorTable:
    """
    Reads an operator table: "in_index", "out_index" and "outputs", the list of output label
    vectors in canonical input order.

    :raises FormatError: If a field is missing or the table has the wrong shape.
    """
    path = pl.Path(path)
    where = str(path)
    data = read_json(path)
    spec = _resolve_lattice(data.get('lattice') if isinstance(data, dict) else None,
                            path.parent, where, lattice)
    in_index = _names(data, 'in_index', where)
    out_index = _names(data, 'out_index', where)
    outputs = _field(data, 'outputs', where)
    expected = spec.size ** len(in_index)
    if not isinstance(outputs, list) or len(outputs) != expected:
        raise FormatError(f'{where}: field "outputs" must list {expected} vectors')
    rows = []
    for number, row in enumerate(outputs):
        if not isinstance(row, list) or len(row) != len(out_index):
            raise FormatError(f'{where}: outputs[{number}] must have {len(out_index)} labels')
        rows.append(tuple(spec.index_of(label) for label in row))
    provenance = data.get('provenance', ProvenanceKind.EXPLICIT.value)
    try:
        provenance = ProvenanceKind(provenance)
    except ValueError as error:
        raise FormatError(f'{where}: unknown provenance "{provenance}"') from error
    return OperatorTable(in_index, out_index, spec, tuple(rows), provenance)


def operator_to_json(op: OperatorTable) -> dict:
    result = op.to_json()
    result['lattice'] = lattice_to_json(op.lattice)
    return result


def parse_vector(text: str, lattice: LatticeSpec, index: IndexSet) -> FuzzyVector:
    """
    Parses a comma-separated label list such as "0,1/2,1".

    :raises FormatError: If a label is unknown.
    :raises ShapeError: If the number of labels does not match the index set.
    """
    labels = [part.strip() for part in text.strip().strip('()').split(',') if part.strip()]
    return FuzzyVector.from_labels(lattice, index, labels)


class ContextFormatHandler(ABC):
    """
    Base class for all context file readers.
    """

    @abstractmethod
    def check_file(self, path: pl.Path) -> bool:
        """
        Checks if the given path can be processed by this handler.

        :param path: Input path
        :return: True, if the file has the format of this handler.
        """
        raise NotImplementedError()

    @abstractmethod
    def load(self, path: pl.Path, lattice: Optional[LatticeSpec]) -> FuzzyContext:
        """
        Reads the context.

        :param path: Input path
        :param lattice: Lattice of the incidence values, required if the file has none.
        :raises FormatError: If the input is not supported by this handler or malformed.
        """
        raise NotImplementedError()


class CsvContextHandler(ContextFormatHandler):
    """
    Handler for CSV contexts: the header row holds the attribute names, the first column the
    object names, all other cells are carrier labels.
    """

    def check_file(self, path: pl.Path) -> bool:
        return path.is_file() and path.suffix.lower() == '.csv'

    def load(self, path: pl.Path, lattice: Optional[LatticeSpec]) -> FuzzyContext:
        if not self.check_file(path):
            raise FormatError(f'{path}: not a CSV file')
        if lattice is None:
            raise FormatError(f'{path}: CSV contexts need an explicit lattice')
        with open(path, 'r', encoding='utf-8', newline='') as reader:
            try:
                rows: List[List[str]] = [row for row in csv.reader(reader) if row]
            except UnicodeDecodeError as error:
                raise FormatError(f'{path}: not UTF-8 encoded (byte {error.start})') from error
            except csv.Error as error:
                raise FormatError(f'{path}: {error}') from error
        if len(rows) < 2:
            raise FormatError(f'{path}: a context needs a header row and one object row')
        attributes = IndexSet(name.strip() for name in rows[0][1:])
        objects = IndexSet(row[0].strip() for row in rows[1:])
        entries = []
        for line, row in enumerate(rows[1:], start=2):
            if len(row) != len(attributes) + 1:
                raise FormatError(f'{path}: line {line} must have {len(attributes) + 1} cells')
            entries.extend((row[0].strip(), attribute, cell.strip())
                           for attribute, cell in zip(attributes, row[1:]))
        return FuzzyContext.from_relation(build_relation(lattice, objects, attributes, entries))


class JsonContextHandler(ContextFormatHandler):
    """
    Handler for JSON contexts in the relation file format (domain = objects,
    codomain = attributes).
    """

    def check_file(self, path: pl.Path) -> bool:
        return path.is_file() and path.suffix.lower() == '.json'

    def load(self, path: pl.Path, lattice: Optional[LatticeSpec]) -> FuzzyContext:
        if not self.check_file(path):
            raise FormatError(f'{path}: not a JSON file')
        return FuzzyContext.from_relation(load_relation(path, lattice))


class DispatchingContextHandler(ContextFormatHandler):
    """
    Handler that dispatches to the first supported handler in a collection of other handlers.
    """

    def __init__(self, handlers: Optional[Sequence[ContextFormatHandler]] = None):
        self._format_handlers = list(handlers) if handlers is not None else [
            CsvContextHandler(),
            JsonContextHandler(),
        ]

    def _get_handler_for_file(self, path: pl.Path) -> ContextFormatHandler:
        """
        :raises FormatError: If no suitable handler is found.
        """
        for handler in self._format_handlers:
            if handler.check_file(path):
                return handler
        raise FormatError(f'{path}: unsupported context file')

    def check_file(self, path: pl.Path) -> bool:
        try:
            return self._get_handler_for_file(path) is not None
        except FormatError:
            return False

    def load(self, path: pl.Path, lattice: Optional[LatticeSpec]) -> FuzzyContext:
        handler = self._get_handler_for_file(path)
        logger.debug('Reading context %s with %s', path, type(handler).__name__)
        return handler.load(path, lattice)


def load_context(path: PathLike, lattice: Optional[LatticeSpec] = None) -> FuzzyContext:
    """
    :raises FileNotFoundError: If the file does not exist.
    :raises FormatError: If the file is malformed or of an unsupported type.
    """
    path = pl.Path(path)
    if not path.exists():
        raise FileNotFoundError(2, 'No such file', str(path))
    return DispatchingContextHandler().load(path, lattice)


def write_text(text: str, path: PathLike) -> None:
    with open(path, 'w', encoding='utf-8') as writer:
        writer.write(text)


def dumps(payload: Dict[str, Any]) -> str:
    """
    Deterministic JSON rendering used for all machine output.
    """
    return json.dumps(payload, sort_keys=True, indent=2) + '\n'
