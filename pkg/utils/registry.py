# Code simplified from https://github.com/open-mmlab/mmengine/blob/main/mmengine/registry/registry.py
# Copyright (c) OpenMMLab. All rights reserved.
import inspect
import logging
from collections.abc import Callable
from typing import Any, Dict, List, Optional, Type, Union

from rich.console import Console
from rich.table import Table

logger = logging.getLogger(__name__)


class Registry:
    """A registry to map strings to classes or functions.

    Registered objects are looked up by name and built from config dicts:

        >>> BUILDERS = Registry('relation builders', key='kind')
        >>> @BUILDERS.register_module('span')
        ... def build_span(space_dim, generators):
        ...     ...
        >>> BUILDERS.build(dict(kind='span', space_dim=2, generators=[]))
    """

    def __init__(self,
                 name: str,
                 build_func: Optional[Callable] = None,
                 key: str = 'type'):
        self._name = name
        self._key = key
        self._module_dict: Dict[str, Type] = dict()

        self.build_func: Callable
        if build_func is None:
            self.build_func = build_from_cfg
        else:
            self.build_func = build_func

    def __len__(self):
        return len(self._module_dict)

    def __contains__(self, name):
        return name in self._module_dict

    def __repr__(self):
        table = Table(title=f'Registry of {self._name}')
        table.add_column('Names', justify='left', style='cyan')
        table.add_column('Objects', justify='left', style='green')

        for name, obj in sorted(self._module_dict.items()):
            table.add_row(name, getattr(obj, '__qualname__', str(obj)))

        console = Console(width=120)
        with console.capture() as capture:
            console.print(table, end='')

        return capture.get()

    @property
    def name(self):
        return self._name

    @property
    def key(self):
        return self._key

    @property
    def module_dict(self):
        return self._module_dict

    def get(self, name: str) -> Optional[Type]:
        return self._module_dict.get(name)

    def build(self, cfg: dict, *args, **kwargs) -> Any:
        """Build an instance by calling :attr:`build_func`."""
        return self.build_func(cfg, *args, **kwargs, registry=self)

    def _register_module(self,
                         module: Type,
                         module_name: Optional[Union[str, List[str]]] = None) -> None:
        if not callable(module):
            raise TypeError(f'module must be Callable, but got {type(module)}')

        if module_name is None:
            module_name = module.__name__
        if isinstance(module_name, str):
            module_name = [module_name]
        for name in module_name:
            if name in self._module_dict:
                existed_module = self.module_dict[name]
                raise KeyError(f'{name} is already registered in {self.name} '
                               f'at {existed_module.__module__}')
            self._module_dict[name] = module

    def register_module(
            self,
            name: Optional[Union[str, List[str]]] = None,
            module: Optional[Type] = None) -> Union[type, Callable]:
        """Register a module.

        It can be used as a decorator or a normal function.
        """
        if not (name is None or isinstance(name, (str, list))):
            raise TypeError(
                'name must be None, an instance of str or list, '
                f'but got {type(name)}')

        # use it as a normal method: x.register_module(module=SomeClass)
        if module is not None:
            self._register_module(module=module, module_name=name)
            return module

        # use it as a decorator: @x.register_module()
        def _register(module):
            self._register_module(module=module, module_name=name)
            return module

        return _register


def build_from_cfg(cfg: dict,
                   *args,
                   registry: Registry,
                   default_args: Optional[dict] = None,
                   **kwargs) -> Any:
    """Build a module from a config dict.

    The entry named by ``registry.key`` selects the registered callable, the
    remaining entries become keyword arguments. Extra positional and keyword
    arguments are forwarded unchanged.
    """
    if not isinstance(cfg, dict):
        raise TypeError(f'cfg should be a dict, but got {type(cfg)}')

    key = registry.key
    if key not in cfg:
        if default_args is None or key not in default_args:
            raise KeyError(
                f'`cfg` or `default_args` must contain the key "{key}", '
                f'but got {cfg}\n{default_args}')

    args_cfg = dict(cfg)
    if default_args is not None:
        for name, value in default_args.items():
            args_cfg.setdefault(name, value)

    obj_type = args_cfg.pop(key)
    if isinstance(obj_type, str):
        obj_cls = registry.get(obj_type)
        if obj_cls is None:
            raise KeyError(
                f'{obj_type} is not in the {registry.name} registry. '
                f'Please check whether the value of `{key}` is correct.')
    elif callable(obj_type):
        obj_cls = obj_type
    else:
        raise TypeError(
            f'{key} must be a str or valid type, but got {type(obj_type)}')

    if inspect.isclass(obj_cls) or inspect.isfunction(obj_cls):
        logger.debug('building %s from the %s registry (%s)',
                     obj_cls.__name__, registry.name, obj_cls.__module__)
    return obj_cls(*args, **args_cfg, **kwargs)
