# Code simplified from https://github.com/open-mmlab/mmengine/blob/main/mmengine/config/config.py
# Copyright (c) OpenMMLab. All rights reserved.
import ast
import copy
import os.path as osp
import types
from pathlib import Path
from typing import Any, Optional, Tuple, Union

from addict import Dict
from utils.util import check_file_exist

BASE_KEY = '_base_'
DELETE_KEY = '_delete_'
RESERVED_KEYS = ['filename', 'text']


class ConfigDict(Dict):

    def __missing__(self, name):
        raise KeyError(name)

    def __getattr__(self, name):
        try:
            value = super().__getattr__(name)
        except KeyError:
            raise AttributeError(f"'{self.__class__.__name__}' object has no "
                                 f"attribute '{name}'")
        return value

    def __deepcopy__(self, memo):
        other = self.__class__()
        memo[id(self)] = other
        for key, value in super().items():
            other[copy.deepcopy(key, memo)] = copy.deepcopy(value, memo)
        return other

    def __copy__(self):
        other = self.__class__()
        for key, value in super().items():
            other[key] = value
        return other

    copy = __copy__

    def merge(self, other: dict):
        """Merge another dictionary into current dictionary.

        Args:
            other (dict): Another dictionary. A nested dict carrying
                ``_delete_=True`` replaces the existing value instead of
                being merged into it.
        """
        merged = Config._merge_a_into_b(copy.deepcopy(other), self)
        self.clear()
        for key, value in merged.items():
            self[key] = value


class RemoveAssignFromAST(ast.NodeTransformer):
    """Remove Assign node if the target's name match the key."""

    def __init__(self, key):
        self.key = key

    def visit_Assign(self, node):
        if (isinstance(node.targets[0], ast.Name)
                and node.targets[0].id == self.key):
            return None
        return node


class Config:
    """A facility for python config files.

    Config files are plain python modules. Every top level name that does
    not start with ``__`` becomes a config key. A file may inherit from
    other files through ``_base_``:

        >>> # configs/default.py
        >>> _base_ = ['./_base_/tolerances.py']
        >>> seed = 1234

        >>> cfg = Config.fromfile('configs/default.py')
        >>> cfg.tolerances.tol_eq
        1e-08
    """

    def __init__(self,
                 cfg_dict: Optional[dict] = None,
                 filename: Optional[Union[str, Path]] = None,
                 cfg_text: Optional[str] = None):
        if cfg_dict is None:
            cfg_dict = dict()
        elif not isinstance(cfg_dict, dict):
            raise TypeError('cfg_dict must be a dict, but '
                            f'got {type(cfg_dict)}')
        for key in cfg_dict:
            if key in RESERVED_KEYS:
                raise KeyError(f'{key} is reserved for config file')

        if filename is not None:
            filename = str(filename)
        super().__setattr__('_cfg_dict', ConfigDict(cfg_dict))
        super().__setattr__('_filename', filename)
        super().__setattr__('_text', cfg_text or '')

    @staticmethod
    def fromfile(filename: Union[str, Path]) -> 'Config':
        """Build a Config instance from a python config file."""
        filename = str(filename)
        cfg_dict, cfg_text = Config._file2dict(filename)
        return Config(cfg_dict, filename=filename, cfg_text=cfg_text)

    @staticmethod
    def _validate_py_syntax(filename: str):
        with open(filename, encoding='utf-8') as f:
            content = f.read()
        try:
            ast.parse(content)
        except SyntaxError as e:
            raise SyntaxError('There are syntax errors in config '
                              f'file {filename}: {e}')

    @staticmethod
    def _get_base_files(filename: str) -> list:
        """Get the base config file names declared by ``_base_``."""
        with open(filename, encoding='utf-8') as f:
            parsed = ast.parse(f.read())
        for node in parsed.body:
            if (isinstance(node, ast.Assign)
                    and isinstance(node.targets[0], ast.Name)
                    and node.targets[0].id == BASE_KEY):
                base_files = ast.literal_eval(node.value)
                if isinstance(base_files, str):
                    base_files = [base_files]
                if not isinstance(base_files, list):
                    raise TypeError(f'{BASE_KEY} must be a str or a list of '
                                    f'str, but got {type(base_files)}')
                return base_files
        return []

    @staticmethod
    def _file2dict(filename: str) -> Tuple[dict, str]:
        """Transform file to variables dictionary.

        Returns:
            Tuple[dict, str]: Variables dictionary and text of Config.
        """
        filename = osp.abspath(osp.expanduser(filename))
        check_file_exist(filename)
        if osp.splitext(filename)[1] != '.py':
            raise OSError('Only py type are supported now!')
        Config._validate_py_syntax(filename)

        base_cfg_dict = ConfigDict()
        cfg_text_list = list()
        for base_file in Config._get_base_files(filename):
            base_path = osp.join(osp.dirname(filename), base_file)
            _cfg_dict, _cfg_text = Config._file2dict(base_path)
            cfg_text_list.append(_cfg_text)
            duplicate_keys = base_cfg_dict.keys() & _cfg_dict.keys()
            if len(duplicate_keys) > 0:
                raise KeyError('Duplicate key is not allowed among bases. '
                               f'Duplicate keys: {duplicate_keys}')
            base_cfg_dict.update(_cfg_dict)

        with open(filename, encoding='utf-8') as f:
            source = f.read()
        parsed_codes = RemoveAssignFromAST(BASE_KEY).visit(ast.parse(source))
        codeobj = compile(parsed_codes, filename, mode='exec')
        global_locals_var: dict = {}
        eval(codeobj, global_locals_var, global_locals_var)
        cfg_dict = {
            key: value
            for key, value in global_locals_var.items()
            if not key.startswith('__')
            and not isinstance(value, (types.FunctionType, types.ModuleType))
        }

        cfg_dict = Config._merge_a_into_b(cfg_dict, base_cfg_dict)
        cfg_text_list.append(filename + '\n' + source)
        return cfg_dict, '\n'.join(cfg_text_list)

    @staticmethod
    def _merge_a_into_b(a: dict, b: dict) -> dict:
        """merge dict ``a`` into dict ``b`` (non-inplace).

        Values in ``a`` overwrite ``b``.

        Examples:
            >>> Config._merge_a_into_b(
            ...     dict(obj=dict(a=2)), dict(obj=dict(a=1, b=1)))
            {'obj': {'a': 2, 'b': 1}}

            >>> Config._merge_a_into_b(
            ...     dict(obj=dict(_delete_=True, a=2)), dict(obj=dict(a=1, b=1)))
            {'obj': {'a': 2}}
        """
        b = ConfigDict(copy.deepcopy(dict(b)))
        for k, v in a.items():
            if isinstance(v, dict):
                v = dict(v)
                delete = v.pop(DELETE_KEY, False)
                if k in b and not delete:
                    if not isinstance(b[k], dict):
                        raise TypeError(
                            f'{k}={v} in child config cannot inherit from '
                            f'base because {k} is a dict in the child config '
                            f'but is of type {type(b[k])} in base config. '
                            f'You may set `{DELETE_KEY}=True` to ignore the '
                            f'base config.')
                    b[k] = Config._merge_a_into_b(v, b[k])
                else:
                    b[k] = ConfigDict(v)
            else:
                b[k] = v
        return b

    def merge_from_dict(self, options: dict) -> None:
        """Merge dotted-key options into the config.

        Examples:
            >>> cfg = Config(dict(tolerances=dict(tol_eq=1e-8)))
            >>> cfg.merge_from_dict({'tolerances.tol_eq': 1e-6, 'seed': 7})
            >>> cfg.tolerances.tol_eq
            1e-06
        """
        option_cfg_dict: dict = {}
        for full_key, v in options.items():
            d = option_cfg_dict
            key_list = full_key.split('.')
            for subkey in key_list[:-1]:
                d = d.setdefault(subkey, {})
            d[key_list[-1]] = v

        cfg_dict = super().__getattribute__('_cfg_dict')
        super().__setattr__('_cfg_dict',
                            Config._merge_a_into_b(option_cfg_dict, cfg_dict))

    @property
    def filename(self) -> Optional[str]:
        return self._filename

    @property
    def text(self) -> str:
        return self._text

    def get(self, name: str, default: Any = None) -> Any:
        return self._cfg_dict.get(name, default)

    def to_dict(self) -> dict:
        return self._cfg_dict.to_dict()

    def __repr__(self):
        return f'Config (path: {self.filename}): {self._cfg_dict.__repr__()}'

    def __len__(self):
        return len(self._cfg_dict)

    def __contains__(self, name):
        return name in self._cfg_dict

    def __getattr__(self, name: str) -> Any:
        return getattr(self._cfg_dict, name)

    def __getitem__(self, name):
        return self._cfg_dict.__getitem__(name)

    def __setattr__(self, name, value):
        if isinstance(value, dict):
            value = ConfigDict(value)
        self._cfg_dict.__setattr__(name, value)

    def __setitem__(self, name, value):
        if isinstance(value, dict):
            value = ConfigDict(value)
        self._cfg_dict.__setitem__(name, value)

    def __iter__(self):
        return iter(self._cfg_dict)
