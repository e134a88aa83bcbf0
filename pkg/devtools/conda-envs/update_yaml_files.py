import yaml

# Environment files written from the sections of ../requirements.yaml
ENVIRONMENTS = {
    'production': 'production_env.yaml',
    'development': 'development_env.yaml',
    'test': 'test_env.yaml',
    'docs': 'docs_env.yaml',
    'setup': 'setup_env.yaml',
    'conda-build': 'build_env.yaml',
}

with open('../requirements.yaml') as stream:
    all_requirements = yaml.load(stream, Loader=yaml.FullLoader)

for section, filename in ENVIRONMENTS.items():
    env_dict = {'channels': all_requirements[section]['channels'],
                'dependencies': all_requirements[section]['dependencies']}
    with open(filename, 'w') as stream:
        yaml.dump(env_dict, stream, sort_keys=False)
