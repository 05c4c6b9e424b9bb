#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

"""
Declarative result tables.

A table class lists its columns as ``Column`` attributes, in output order,
and names itself in an inner ``Meta``. Rows are rendered from arbitrary
objects or mappings; undefined numbers are written as ``NA``.
"""

import collections
import csv
import json
import math
import numbers

import numpy as np


MISSING = 'NA'


def format_value(value):
    if value is None:
        return MISSING
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        value = float(value)
        return MISSING if math.isnan(value) else '%.17g' % value
    return str(value)


def json_value(value):
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Real):
        value = float(value)
        return None if math.isnan(value) else value
    if isinstance(value, (list, tuple, np.ndarray)):
        return [json_value(v) for v in value]
    if isinstance(value, dict):
        return {str(k): json_value(v) for k, v in value.items()}
    return value


class Column(object):
    """One output column.

    :param transform: attribute or key read from each datum, or a callable
        taking the datum
    :param verbose_name: human readable description, used in JSON metadata
    """

    def __init__(self, transform, verbose_name=None):
        self.transform = transform
        self.verbose_name = verbose_name
        self.name = None

    def get_raw_data(self, datum):
        if callable(self.transform):
            return self.transform(datum)
        if isinstance(datum, dict):
            return datum.get(self.transform)
        return getattr(datum, self.transform, None)

    def get_data(self, datum):
        return format_value(self.get_raw_data(datum))


class DataTableOptions(object):
    def __init__(self, options):
        self.name = getattr(options, 'name', 'table')
        self.verbose_name = getattr(options, 'verbose_name', self.name)
        self.columns = getattr(options, 'columns', None)


class DataTableMetaclass(type):
    def __new__(mcs, name, bases, attrs):
        columns = collections.OrderedDict()
        for base in bases:
            columns.update(getattr(base, 'base_columns', {}))
        for attr_name, value in list(attrs.items()):
            if isinstance(value, Column):
                value.name = attr_name
                columns[attr_name] = attrs.pop(attr_name)
        attrs['_meta'] = DataTableOptions(attrs.get('Meta'))
        if attrs['_meta'].columns:
            columns = collections.OrderedDict(
                (c, columns[c]) for c in attrs['_meta'].columns)
        attrs['base_columns'] = columns
        return super(DataTableMetaclass, mcs).__new__(mcs, name, bases,
                                                      attrs)


class DataTable(object, metaclass=DataTableMetaclass):
    def __init__(self, data):
        self.data = list(data)

    @property
    def columns(self):
        return self.base_columns

    def header(self):
        return list(self.columns)

    def get_rows(self):
        for datum in self.data:
            yield [column.get_data(datum)
                   for column in self.columns.values()]

    def to_json_data(self):
        return [collections.OrderedDict(
                    (name, json_value(column.get_raw_data(datum)))
                    for name, column in self.columns.items())
                for datum in self.data]

    def write_csv(self, stream):
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(self.header())
        for row in self.get_rows():
            writer.writerow(row)

    def write_json(self, stream, extra=None):
        document = collections.OrderedDict()
        document['table'] = self._meta.name
        if extra:
            document.update((k, json_value(v)) for k, v in extra.items())
        document['rows'] = self.to_json_data()
        json.dump(document, stream, indent=2, allow_nan=False)
        stream.write('\n')

    def write(self, path, fmt='csv', extra=None):
        with open(path, 'w', newline='') as stream:
            if fmt == 'json':
                self.write_json(stream, extra=extra)
            else:
                self.write_csv(stream)
        return path
